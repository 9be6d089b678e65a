// Command-line driver: circuit generation, graph exports, exact and sampled
// error-number distributions, syndrome solving, sweeps and threshold curves.
//
// Exit codes: 0 ok, 1 usage, 2 infeasible (instance too large, unsatisfiable,
// no crossing), 3 I/O.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qprop/analysis.hpp"
#include "qprop/circuit.hpp"
#include "qprop/distribution.hpp"
#include "qprop/graph.hpp"
#include "qprop/sampler.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Generator specs: "KIND key=value ...", e.g. "staircase n=6".

struct GenSpec {
    std::string kind;
    std::map<std::string, std::string> args;

    bool has(const std::string& key) const { return args.count(key) != 0; }

    long get_int(const std::string& key) const {
        const auto it = args.find(key);
        if (it == args.end()) throw UsageError("generator " + kind + " requires " + key + "=");
        try {
            return std::stol(it->second);
        } catch (const std::exception&) {
            throw UsageError("generator argument " + key + "=" + it->second + " is not an integer");
        }
    }

    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const {
        const auto it = args.find(key);
        if (it == args.end()) return fallback;
        try {
            return std::stoull(it->second);
        } catch (const std::exception&) {
            throw UsageError("generator argument " + key + "=" + it->second + " is not an integer");
        }
    }
};

GenSpec parse_gen_spec(const std::string& text) {
    std::istringstream in(text);
    GenSpec spec;
    if (!(in >> spec.kind)) throw UsageError("empty generator spec");
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("generator argument \"" + token + "\" is not key=value");
        }
        spec.args[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return spec;
}

qprop::Circuit circuit_from_spec(const GenSpec& spec) {
    if (spec.kind == "empty") {
        return qprop::gen_empty(static_cast<int>(spec.get_int("n")), static_cast<int>(spec.get_int("T")));
    }
    if (spec.kind == "staircase") {
        return qprop::gen_staircase_transversal(static_cast<int>(spec.get_int("n")));
    }
    if (spec.kind == "parallel") {
        return qprop::gen_parallel_transversal(static_cast<int>(spec.get_int("n")));
    }
    if (spec.kind == "cnot-pair") {
        return qprop::Circuit{2, 2, {{1, 2, 1}}};
    }
    if (spec.kind == "random-global") {
        return qprop::gen_random_global(static_cast<int>(spec.get_int("n")), static_cast<int>(spec.get_int("T")),
                                        static_cast<int>(spec.get_int("k")), spec.get_u64("seed", 1));
    }
    if (spec.kind == "random-local") {
        return qprop::gen_random_local(static_cast<int>(spec.get_int("n")), static_cast<int>(spec.get_int("T")),
                                       static_cast<int>(spec.get_int("k")), spec.get_u64("seed", 1));
    }
    if (spec.kind == "complete-rsg") {
        throw UsageError("complete-rsg has no gate-level circuit; it is only usable where a graph suffices");
    }
    throw UsageError("unknown generator kind \"" + spec.kind + "\"");
}

// ---------------------------------------------------------------------------
// Circuit / graph source shared by most subcommands.

struct SourceOptions {
    std::string circuit_path;
    std::string gen_spec;
    std::string mode = "parity-exact";
    int window_override = 0;  // --T, applied onto the generator spec

    void attach(CLI::App* cmd) {
        cmd->add_option("--circuit", circuit_path, "circuit JSON file");
        cmd->add_option("--gen", gen_spec, "inline generator spec, e.g. \"staircase n=6\"");
        cmd->add_option("--T", window_override, "window count handed to the generator spec");
        cmd->add_option("--mode", mode, "RSG semantics: parity-exact | path")
            ->check(CLI::IsMember({"parity-exact", "path"}));
    }

    qprop::RsgMode rsg_mode() const {
        return mode == "path" ? qprop::RsgMode::PathExistence : qprop::RsgMode::ParityExact;
    }

    bool is_complete_rsg() const {
        return !gen_spec.empty() && parse_gen_spec(gen_spec).kind == "complete-rsg";
    }

    GenSpec spec() const {
        GenSpec s = parse_gen_spec(gen_spec);
        if (window_override > 0) s.args["T"] = std::to_string(window_override);
        return s;
    }

    qprop::Circuit load_circuit() const {
        if (circuit_path.empty() == gen_spec.empty()) {
            throw UsageError("exactly one of --circuit and --gen is required");
        }
        if (!gen_spec.empty()) return circuit_from_spec(spec());
        if (window_override > 0) throw UsageError("--T only applies together with --gen");
        std::ifstream in(circuit_path);
        if (!in) throw IoError("cannot open circuit file " + circuit_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return qprop::parse_circuit(buf.str());
    }

    qprop::Rsg load_rsg() const {
        if (is_complete_rsg()) {
            const GenSpec s = spec();
            return qprop::gen_complete_rsg(static_cast<int>(s.get_int("n")),
                                           static_cast<int>(s.get_int("T")));
        }
        return qprop::build_rsg(qprop::build_epstg(load_circuit()), rsg_mode());
    }
};

// ---------------------------------------------------------------------------
// Output plumbing.

struct Output {
    std::string path;  // empty = stdout
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty() || path == "-") return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw IoError("cannot open output file " + path);
        }
        return file;
    }
};

std::string command_line(int argc, char** argv) {
    std::string cmd;
    for (int i = 0; i < argc; ++i) {
        if (i) cmd += ' ';
        const std::string arg = argv[i];
        cmd += arg.find(' ') == std::string::npos ? arg : "\"" + arg + "\"";
    }
    return cmd;
}

std::vector<double> parse_grid(const std::string& text) {
    // Either "a:b:step" or a comma list.
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        double a = 0, b = 0, step = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(text);
        if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0) {
            throw UsageError("grid \"" + text + "\" is not start:stop:step");
        }
        for (double v = a; v <= b + step * 1e-9; v += step) values.push_back(v);
    } else {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            try {
                values.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw UsageError("grid entry \"" + tok + "\" is not a number");
            }
        }
    }
    if (values.empty()) throw UsageError("grid \"" + text + "\" is empty");
    return values;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        try {
            values.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw UsageError("list entry \"" + tok + "\" is not an integer");
        }
    }
    return values;
}

// ---------------------------------------------------------------------------
// Subcommand payloads.

struct CommonFlags {
    double p = 0.01;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out;
    std::string format = "csv";
};

void write_distribution(std::ostream& os, const std::string& cmd, const qprop::ErrorDistribution& dist,
                        const std::map<std::string, double>& footer, const std::string& format,
                        const std::vector<std::uint64_t>* counts) {
    if (format == "json") {
        nlohmann::json doc;
        doc["cmd"] = cmd;
        doc["P"] = dist.probs();
        if (counts) doc["counts"] = *counts;
        for (const auto& [key, value] : footer) doc[key] = value;
        os << doc.dump(2) << "\n";
        return;
    }
    os << "# cmd: " << cmd << "\n";
    os << (counts ? "k,P,count\n" : "k,P\n");
    os.precision(17);
    for (std::size_t k = 0; k < dist.size(); ++k) {
        os << k << "," << dist[k];
        if (counts) os << "," << (*counts)[k];
        os << "\n";
    }
    for (const auto& [key, value] : footer) os << "# " << key << " = " << value << "\n";
}

int cmd_gen(const SourceOptions& src, Output& out) {
    const qprop::Circuit c = src.load_circuit();
    out.stream() << qprop::serialize_circuit(c) << "\n";
    if (!out.stream().good()) throw IoError("write failed");
    return kExitOk;
}

int cmd_graph(const SourceOptions& src, const std::string& what, const std::string& format, Output& out,
              const std::string& cmd) {
    const qprop::GraphFormat gf = format == "dot" ? qprop::GraphFormat::Dot : qprop::GraphFormat::JsonEdges;
    if (format != "dot" && format != "json-edges") {
        throw UsageError("unknown graph format \"" + format + "\"");
    }
    const qprop::Rsg rsg = src.load_rsg();
    if (what == "epstg") {
        if (src.is_complete_rsg()) throw UsageError("complete-rsg has no layered graph form");
        out.stream() << qprop::export_graph(qprop::build_epstg(src.load_circuit()), gf);
    } else if (what == "rsg") {
        out.stream() << qprop::export_graph(rsg, gf);
    } else {
        throw UsageError("unknown graph kind \"" + what + "\" (rsg | epstg)");
    }

    // Component summary: count line, then one line per readout.
    std::ostream& summary = out.path.empty() ? std::cerr : std::cout;
    const auto parts = qprop::components(rsg);
    summary << "# cmd: " << cmd << "\n";
    summary << "components," << parts.components.size() << "\n";
    summary << "readout,degree,component\n";
    std::vector<std::size_t> component_of(static_cast<std::size_t>(rsg.readout_count()) + 1, 0);
    for (std::size_t i = 0; i < parts.components.size(); ++i) {
        for (int q : parts.components[i].readouts) component_of[static_cast<std::size_t>(q)] = i;
    }
    for (int q = 1; q <= rsg.readout_count(); ++q) {
        summary << "R" << q << "," << rsg.readout_degree(q) << "," << component_of[static_cast<std::size_t>(q)]
                << "\n";
    }
    return kExitOk;
}

int cmd_exact(const SourceOptions& src, const CommonFlags& flags, Output& out, const std::string& cmd) {
    const qprop::Rsg rsg = src.load_rsg();
    qprop::ErrorDistribution dist;
    try {
        dist = qprop::component_distribution(rsg, flags.p);
    } catch (const qprop::InstanceTooLarge& e) {
        throw Infeasible(std::string(e.what()) + "; use the sample command instead");
    }
    const qprop::Moments m = qprop::moments(dist);
    const double shift_value = qprop::shift(m, rsg.readout_count(), rsg.window_count(), flags.p);
    write_distribution(out.stream(), cmd, dist,
                       {{"E", m.expectation},
                        {"Var", m.variance},
                        {"entropy", qprop::entropy(dist)},
                        {"shift", shift_value},
                        {"p", flags.p}},
                       flags.format, nullptr);
    return kExitOk;
}

int cmd_solve(const SourceOptions& src, const std::string& syndrome_text, Output& out) {
    const qprop::Rsg rsg = src.load_rsg();
    qprop::BitVector b(static_cast<std::size_t>(rsg.readout_count()));
    for (int q : parse_int_list(syndrome_text)) {
        if (q < 1 || q > rsg.readout_count()) {
            throw UsageError("syndrome readout " + std::to_string(q) + " out of range");
        }
        b.set(static_cast<std::size_t>(q) - 1, true);
    }
    const auto v = qprop::solve(rsg.matrix(), b);
    if (!v) {
        out.stream() << "unsatisfiable\n";
        return kExitInfeasible;
    }
    if (qprop::mat_vec(rsg.matrix(), *v) != b) {
        throw std::logic_error("solver returned an unverified pattern");
    }
    std::ostream& os = out.stream();
    os << "satisfiable\n";
    for (std::size_t col = 0; col < v->size(); ++col) {
        if (!v->get(col)) continue;
        const qprop::SiteId site = rsg.site_of(col);
        os << "Q" << site.qubit << "[" << site.window << "]\n";
    }
    return kExitOk;
}

int cmd_sample(const SourceOptions& src, const CommonFlags& flags, Output& out, const std::string& cmd) {
    const qprop::Rsg rsg = src.load_rsg();
    const qprop::SampleReport report = qprop::sample(rsg, flags.p, flags.shots, flags.seed, flags.workers);
    write_distribution(out.stream(), cmd, report.distribution,
                       {{"E", report.expectation},
                        {"Var", report.variance},
                        {"stderr", report.expectation_stderr},
                        {"shots", static_cast<double>(report.shots)},
                        {"seed", static_cast<double>(report.seed)},
                        {"p", flags.p}},
                       flags.format, &report.counts);
    return kExitOk;
}

int cmd_sweep(const SourceOptions& src, const CommonFlags& flags, const std::string& axis,
              const std::string& grid_text, Output& out, const std::string& cmd) {
    if (axis != "T" && axis != "p") throw UsageError("--axis must be T or p");
    const std::vector<double> grid = parse_grid(grid_text);
    if (src.gen_spec.empty()) throw UsageError("sweep requires --gen (the axis re-instantiates the circuit)");
    const GenSpec base = src.spec();

    auto instance_at = [&](double value) -> qprop::SweepInstance {
        GenSpec spec = base;
        double p = flags.p;
        if (axis == "T") {
            spec.args["T"] = std::to_string(static_cast<long>(std::llround(value)));
        } else {
            p = value;
        }
        if (spec.kind == "complete-rsg") {
            return {qprop::gen_complete_rsg(static_cast<int>(spec.get_int("n")),
                                            static_cast<int>(spec.get_int("T"))),
                    p};
        }
        return {qprop::build_rsg(qprop::build_epstg(circuit_from_spec(spec)), src.rsg_mode()), p};
    };

    const auto rows = qprop::sweep(grid, instance_at, flags.shots, flags.seed, flags.workers);
    std::ostream& os = out.stream();
    if (flags.format == "json") {
        nlohmann::json doc;
        doc["cmd"] = cmd;
        doc["axis"] = axis;
        for (const auto& row : rows) {
            doc["rows"].push_back({{"axis", row.axis},
                                   {"E", row.expectation},
                                   {"Var", row.variance},
                                   {"shift", row.shift},
                                   {"entropy", row.entropy},
                                   {"stderr", row.stderr_e},
                                   {"shots", row.shots},
                                   {"seed", row.seed}});
        }
        os << doc.dump(2) << "\n";
        return kExitOk;
    }
    os << "# cmd: " << cmd << "\n";
    os << "axis,E,Var,shift,entropy,stderr,shots,seed\n";
    os.precision(17);
    for (const auto& row : rows) {
        os << row.axis << "," << row.expectation << "," << row.variance << "," << row.shift << ","
           << row.entropy << "," << row.stderr_e << "," << row.shots << "," << row.seed << "\n";
    }
    return kExitOk;
}

// Per-distance misidentification curves; the optional inflation adds a
// circuit family's per-qubit shift onto the physical rate.
struct ThresholdConfig {
    std::vector<int> distances;
    std::vector<double> p_grid;
    std::string inflate;  // empty | parallel | staircase n= | complete-rsg n= T=
};

double inflated_rate(const std::string& inflate_spec, double p) {
    if (inflate_spec.empty()) return p;
    const GenSpec spec = parse_gen_spec(inflate_spec);
    if (spec.kind == "parallel") {
        return p + p * (1.0 - 2.0 * p) * (1.0 - 2.0 * p) / 2.0;
    }
    if (spec.kind == "complete-rsg") {
        const int n = static_cast<int>(spec.get_int("n"));
        const int T = static_cast<int>(spec.get_int("T"));
        const qprop::Moments m = qprop::moments(qprop::closed_fully(n, T, p));
        return p + qprop::shift(m, n, T, p) / n;
    }
    if (spec.kind == "staircase") {
        const int n = static_cast<int>(spec.get_int("n"));
        const qprop::ErrorDistribution d = qprop::dp_transversal(n / 2, p);
        const qprop::Moments m = qprop::moments(d);
        return p + qprop::shift(m, n, n / 2 + 1, p) / n;
    }
    throw UsageError("unsupported inflation kind \"" + spec.kind + "\"");
}

int cmd_threshold(const ThresholdConfig& cfg, const std::string& inflate, Output& out, const std::string& cmd,
                  const std::string& format) {
    for (int d : cfg.distances) {
        if (d < 1 || d % 2 == 0) throw UsageError("distances must be odd and >= 1");
    }
    auto logical_rate = [&](int d, double p) { return qprop::surface_misid_rate(d, inflated_rate(inflate, p)); };

    std::ostream& os = out.stream();
    nlohmann::json doc;
    if (format == "json") {
        doc["cmd"] = cmd;
    } else {
        os << "# cmd: " << cmd << "\n";
        os << "p";
        for (int d : cfg.distances) os << ",pl_d" << d;
        os << "\n";
        os.precision(17);
    }
    for (double p : cfg.p_grid) {
        if (format == "json") {
            nlohmann::json row;
            row["p"] = p;
            for (int d : cfg.distances) row["pl_d" + std::to_string(d)] = logical_rate(d, p);
            doc["rows"].push_back(row);
        } else {
            os << p;
            for (int d : cfg.distances) os << "," << logical_rate(d, p);
            os << "\n";
        }
    }

    // Pairwise crossings: bisection on the sign of the log-ratio.
    bool any_crossing = false;
    std::vector<std::string> reports;
    for (std::size_t i = 0; i + 1 < cfg.distances.size(); ++i) {
        const int d1 = cfg.distances[i];
        const int d2 = cfg.distances[i + 1];
        auto ratio_sign = [&](double p) {
            const double a = logical_rate(d1, p);
            const double b = logical_rate(d2, p);
            if (a <= 0.0 || b <= 0.0) return 0;
            const double lr = std::log(a / b);
            return lr > 0.0 ? 1 : (lr < 0.0 ? -1 : 0);
        };
        std::optional<double> found;
        for (std::size_t g = 0; g + 1 < cfg.p_grid.size(); ++g) {
            double lo = cfg.p_grid[g];
            double hi = cfg.p_grid[g + 1];
            const int slo = ratio_sign(lo);
            const int shi = ratio_sign(hi);
            if (slo == 0 || shi == 0 || slo == shi) continue;
            while (hi - lo > 1e-4) {
                const double mid = 0.5 * (lo + hi);
                if (ratio_sign(mid) == slo) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            found = 0.5 * (lo + hi);
            break;
        }
        std::ostringstream line;
        if (found) {
            any_crossing = true;
            line << "crossing d" << d1 << "/d" << d2 << " p = " << *found;
        } else {
            line << "crossing d" << d1 << "/d" << d2 << " = none";
        }
        reports.push_back(line.str());
    }
    if (format == "json") {
        doc["crossings"] = reports;
        os << doc.dump(2) << "\n";
    } else {
        for (const auto& line : reports) os << "# " << line << "\n";
    }
    return any_crossing || cfg.distances.size() < 2 ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bit-flip error propagation analysis for CNOT circuits"};
    app.require_subcommand(1);
    const std::string cmd = command_line(argc, argv);

    SourceOptions src;
    CommonFlags flags;
    std::string graph_what = "rsg";
    std::string graph_format = "json-edges";
    std::string syndrome;
    std::string axis = "T";
    std::string grid;
    std::string distances_text = "3,5";
    std::string p_grid_text = "0.01:0.3:0.001";
    std::string inflate;

    CLI::App* gen = app.add_subcommand("gen", "write a generated circuit as JSON");
    src.attach(gen);
    gen->add_option("--out", flags.out, "output file (default stdout)");

    CLI::App* graph = app.add_subcommand("graph", "export EPSTG/RSG and a component summary");
    src.attach(graph);
    graph->add_option("--what", graph_what, "rsg | epstg");
    graph->add_option("--graph-format", graph_format, "dot | json-edges");
    graph->add_option("--out", flags.out, "output file (default stdout)");

    CLI::App* exact = app.add_subcommand("exact", "exact error-number distribution");
    src.attach(exact);
    exact->add_option("--p", flags.p, "bit-flip probability per qubit per window");
    exact->add_option("--out", flags.out, "output file (default stdout)");
    exact->add_option("--format", flags.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* solve = app.add_subcommand("solve", "find a source pattern for a syndrome");
    src.attach(solve);
    solve->add_option("--syndrome", syndrome, "comma list of flipped readouts, e.g. 1,2 (empty = none)");
    solve->add_option("--out", flags.out, "output file (default stdout)");

    CLI::App* sample = app.add_subcommand("sample", "Monte Carlo distribution estimate");
    src.attach(sample);
    sample->add_option("--p", flags.p, "bit-flip probability per qubit per window");
    sample->add_option("--shots", flags.shots, "number of samples");
    sample->add_option("--seed", flags.seed, "PRNG seed");
    sample->add_option("--workers", flags.workers, "worker threads");
    sample->add_option("--out", flags.out, "output file (default stdout)");
    sample->add_option("--format", flags.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* sweep = app.add_subcommand("sweep", "sampled sweep over a T or p grid");
    src.attach(sweep);
    sweep->add_option("--axis", axis, "T | p");
    sweep->add_option("--grid", grid, "start:stop:step or comma list")->required();
    sweep->add_option("--p", flags.p, "fixed p when sweeping T");
    sweep->add_option("--shots", flags.shots, "samples per grid point");
    sweep->add_option("--seed", flags.seed, "PRNG seed");
    sweep->add_option("--workers", flags.workers, "worker threads");
    sweep->add_option("--out", flags.out, "output file (default stdout)");
    sweep->add_option("--format", flags.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* threshold = app.add_subcommand("threshold", "logical-rate curves and crossings");
    threshold->add_option("--distances", distances_text, "odd code distances, comma list");
    threshold->add_option("--p-grid", p_grid_text, "physical error rate grid");
    threshold->add_option("--inflate", inflate,
                          "apply a circuit family's per-qubit shift to the rate, "
                          "e.g. \"parallel\" or \"complete-rsg n=4 T=2\"");
    threshold->add_option("--out", flags.out, "output file (default stdout)");
    threshold->add_option("--format", flags.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Output out;
    out.path = flags.out;
    try {
        if (gen->parsed()) return cmd_gen(src, out);
        if (graph->parsed()) return cmd_graph(src, graph_what, graph_format, out, cmd);
        if (exact->parsed()) return cmd_exact(src, flags, out, cmd);
        if (solve->parsed()) return cmd_solve(src, syndrome, out);
        if (sample->parsed()) return cmd_sample(src, flags, out, cmd);
        if (sweep->parsed()) return cmd_sweep(src, flags, axis, grid, out, cmd);
        if (threshold->parsed()) {
            ThresholdConfig cfg;
            cfg.distances = parse_int_list(distances_text);
            cfg.p_grid = parse_grid(p_grid_text);
            return cmd_threshold(cfg, inflate, out, cmd, flags.format);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Infeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const qprop::InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qprop::CircuitFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
