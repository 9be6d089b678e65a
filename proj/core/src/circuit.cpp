#include "qprop/circuit.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"
#include "qprop/rng.hpp"

namespace qprop {

std::vector<std::string> validate(const Circuit& c) {
    std::vector<std::string> problems;
    if (c.n < 1) problems.push_back("qubit count must be >= 1");
    if (c.T < 1) problems.push_back("window count must be >= 1");
    int prev_window = 1;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        const std::string where = "gate " + std::to_string(i) + ": ";
        if (g.control == g.target) problems.push_back(where + "control equals target");
        if (g.control < 1 || g.control > c.n) problems.push_back(where + "control out of range");
        if (g.target < 1 || g.target > c.n) problems.push_back(where + "target out of range");
        if (g.window < 1 || g.window > c.T) problems.push_back(where + "window out of range");
        if (g.window < prev_window) problems.push_back(where + "gates not sorted by window");
        prev_window = g.window;
    }
    return problems;
}

void require_valid(const Circuit& c) {
    const auto problems = validate(c);
    if (problems.empty()) return;
    std::string joined;
    for (const auto& p : problems) {
        if (!joined.empty()) joined += "; ";
        joined += p;
    }
    throw std::invalid_argument("invalid circuit: " + joined);
}

namespace {

int require_int_field(const nlohmann::json& obj, const char* key, const char* what) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw CircuitFormatError(std::string("missing field \"") + key + "\" in " + what);
    if (!it->is_number_integer()) {
        throw CircuitFormatError(std::string("field \"") + key + "\" in " + what + " must be an integer");
    }
    return it->get<int>();
}

void reject_unknown_fields(const nlohmann::json& obj, std::initializer_list<const char*> known,
                           const char* what) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw CircuitFormatError("unknown field \"" + key + "\" in " + what);
    }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CircuitFormatError(std::string("malformed circuit document: ") + e.what());
    }
    if (!doc.is_object()) throw CircuitFormatError("circuit document must be a JSON object");
    reject_unknown_fields(doc, {"n", "T", "gates"}, "circuit");

    Circuit c;
    c.n = require_int_field(doc, "n", "circuit");
    c.T = require_int_field(doc, "T", "circuit");
    const auto gates_it = doc.find("gates");
    if (gates_it == doc.end() || !gates_it->is_array()) {
        throw CircuitFormatError("circuit requires a \"gates\" array");
    }
    for (const auto& g : *gates_it) {
        if (!g.is_object()) throw CircuitFormatError("gate entries must be objects");
        reject_unknown_fields(g, {"t", "c", "x"}, "gate");
        Gate gate;
        gate.window = require_int_field(g, "t", "gate");
        gate.control = require_int_field(g, "c", "gate");
        gate.target = require_int_field(g, "x", "gate");
        c.gates.push_back(gate);
    }
    const auto problems = validate(c);
    if (!problems.empty()) throw CircuitFormatError("invalid circuit: " + problems.front());
    return c;
}

std::string serialize_circuit(const Circuit& c) {
    nlohmann::json doc;
    doc["n"] = c.n;
    doc["T"] = c.T;
    doc["gates"] = nlohmann::json::array();
    for (const Gate& g : c.gates) {
        doc["gates"].push_back({{"t", g.window}, {"c", g.control}, {"x", g.target}});
    }
    return doc.dump();
}

Circuit gen_empty(int n, int T) {
    if (n < 1 || T < 1) throw std::invalid_argument("gen_empty: n and T must be >= 1");
    return Circuit{n, T, {}};
}

Circuit gen_staircase_transversal(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("gen_staircase_transversal: n must be even and >= 2");
    const int r = n / 2;
    Circuit c{n, r + 1, {}};
    for (int k = 1; k <= r; ++k) c.gates.push_back({k, k + r, k});
    return c;
}

Circuit gen_parallel_transversal(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("gen_parallel_transversal: n must be even and >= 2");
    const int r = n / 2;
    Circuit c{n, 2, {}};
    for (int k = 1; k <= r; ++k) c.gates.push_back({k, k + r, 1});
    return c;
}

namespace {

// k disjoint ordered pairs via a partial Fisher-Yates shuffle of [1, n].
std::vector<Gate> draw_disjoint_pairs(int n, int k, int window, SeqRng& rng) {
    std::vector<int> qubits(n);
    std::iota(qubits.begin(), qubits.end(), 1);
    for (int i = 0; i < 2 * k; ++i) {
        const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(qubits[i], qubits[j]);
    }
    std::vector<Gate> gates;
    gates.reserve(k);
    for (int i = 0; i < k; ++i) gates.push_back({qubits[2 * i], qubits[2 * i + 1], window});
    return gates;
}

}  // namespace

Circuit gen_random_global(int n, int T, int k, std::uint64_t seed) {
    if (n < 1 || T < 1 || k < 1) throw std::invalid_argument("gen_random_global: n, T, k must be >= 1");
    if (2 * k > n) throw std::invalid_argument("gen_random_global: 2k must not exceed n");
    Circuit c{n, T, {}};
    for (int t = 1; t <= T; ++t) {
        SeqRng rng(seed, static_cast<std::uint64_t>(t));
        for (Gate g : draw_disjoint_pairs(n, k, t, rng)) c.gates.push_back(g);
    }
    return c;
}

Circuit gen_random_local(int n, int T, int k, std::uint64_t seed) {
    if (n < 1 || T < 1 || k < 1) throw std::invalid_argument("gen_random_local: n, T, k must be >= 1");
    if (2 * k > n) throw std::invalid_argument("gen_random_local: 2k must not exceed n");
    SeqRng rng(seed, 1);
    const auto pairs = draw_disjoint_pairs(n, k, 1, rng);
    Circuit c{n, T, {}};
    for (int t = 1; t <= T; ++t) {
        for (Gate g : pairs) {
            g.window = t;
            c.gates.push_back(g);
        }
    }
    return c;
}

}  // namespace qprop
