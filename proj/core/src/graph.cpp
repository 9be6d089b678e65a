#include "qprop/graph.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qprop {

Epstg build_epstg(const Circuit& c) {
    require_valid(c);
    std::vector<BitMatrix> transfer;
    transfer.reserve(static_cast<std::size_t>(c.T));
    for (int t = 1; t <= c.T; ++t) transfer.push_back(BitMatrix::identity(static_cast<std::size_t>(c.n)));
    // A gate CNOT(c, x) maps the error state s to (I + e_x e_c^T) s, so applying
    // it to the window matrix in order is: row target ^= row control.
    for (const Gate& g : c.gates) {
        BitMatrix& a = transfer[static_cast<std::size_t>(g.window) - 1];
        a.xor_rows(static_cast<std::size_t>(g.target) - 1, static_cast<std::size_t>(g.control) - 1);
    }
    return Epstg(c.n, c.T, std::move(transfer));
}

Rsg build_rsg(const Epstg& g, RsgMode mode) {
    const int n = g.qubit_count();
    const int T = g.window_count();
    const std::size_t un = static_cast<std::size_t>(n);

    // reach.row(i) = readouts affected by an error sitting on qubit i at the
    // start of the window being processed. Walking windows backwards, the new
    // row i combines reach rows j over transfer entries A_t[j][i] = 1:
    // with XOR this is the transpose of the product A_T ... A_t, with OR it is
    // the same product over the boolean semiring (pure reachability).
    BitMatrix reach = BitMatrix::identity(un);
    BitMatrix m(un, un * static_cast<std::size_t>(T));

    for (int t = T; t >= 1; --t) {
        const BitMatrix& a = g.window_transfer(t);
        BitMatrix next(un, un);
        for (std::size_t i = 0; i < un; ++i) {
            for (std::size_t j = 0; j < un; ++j) {
                if (!a.get(j, i)) continue;
                if (mode == RsgMode::ParityExact) {
                    next.xor_row_from(i, reach, j);
                } else {
                    next.or_row_from(i, reach, j);
                }
            }
        }
        reach = std::move(next);
        for (std::size_t i = 0; i < un; ++i) {
            const std::size_t col = static_cast<std::size_t>(t - 1) * un + i;
            for (std::size_t read = 0; read < un; ++read) {
                if (reach.get(i, read)) m.set(read, col, true);
            }
        }
    }
    return Rsg(std::move(m), n, T, mode);
}

Rsg gen_complete_rsg(int n, int T) {
    if (n < 1 || T < 1) throw std::invalid_argument("gen_complete_rsg: n and T must be >= 1");
    const std::size_t un = static_cast<std::size_t>(n);
    BitMatrix m(un, un * static_cast<std::size_t>(T));
    for (std::size_t r = 0; r < un; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, true);
    }
    return Rsg(std::move(m), n, T, RsgMode::ParityExact);
}

std::vector<std::size_t> Rsg::qubit_major_columns() const {
    std::vector<std::size_t> order;
    order.reserve(site_count());
    for (int q = 1; q <= n_; ++q) {
        for (int t = 1; t <= T_; ++t) order.push_back(column_of({q, t}));
    }
    return order;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ComponentPartition components(const Rsg& rsg) {
    const std::size_t n = static_cast<std::size_t>(rsg.readout_count());
    const std::size_t m = rsg.site_count();
    UnionFind uf(n + m);
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < m; ++col) {
            if (rsg.matrix().get(row, col)) uf.unite(row, n + col);
        }
    }
    // Rows drive the component order: first appearance of each root wins.
    std::vector<std::size_t> root_component(n + m, SIZE_MAX);
    ComponentPartition parts;
    for (std::size_t row = 0; row < n; ++row) {
        const std::size_t root = uf.find(row);
        if (root_component[root] == SIZE_MAX) {
            root_component[root] = parts.components.size();
            parts.components.emplace_back();
        }
        parts.components[root_component[root]].readouts.push_back(static_cast<int>(row) + 1);
    }
    for (std::size_t col = 0; col < m; ++col) {
        bool nonzero = false;
        for (std::size_t row = 0; row < n && !nonzero; ++row) nonzero = rsg.matrix().get(row, col);
        if (!nonzero) continue;
        parts.components[root_component[uf.find(n + col)]].columns.push_back(col);
    }
    return parts;
}

namespace {

std::string site_name(SiteId s) {
    return "Q" + std::to_string(s.qubit) + "[" + std::to_string(s.window) + "]";
}

std::string readout_name(int qubit) { return "R" + std::to_string(qubit); }

std::string render_edges(const std::vector<std::pair<std::string, std::string>>& edges, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::Dot) {
        out << "digraph g {\n";
        for (const auto& [from, to] : edges) out << "  \"" << from << "\" -> \"" << to << "\";\n";
        out << "}\n";
    } else {
        out << "{\"edges\":[";
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i) out << ",";
            out << "[\"" << edges[i].first << "\",\"" << edges[i].second << "\"]";
        }
        out << "]}\n";
    }
    return out.str();
}

}  // namespace

std::string export_graph(const Rsg& rsg, GraphFormat format) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t col = 0; col < rsg.site_count(); ++col) {
        for (int q = 1; q <= rsg.readout_count(); ++q) {
            if (rsg.matrix().get(static_cast<std::size_t>(q) - 1, col)) {
                edges.emplace_back(site_name(rsg.site_of(col)), readout_name(q));
            }
        }
    }
    return render_edges(edges, format);
}

std::string export_graph(const Epstg& g, GraphFormat format) {
    std::vector<std::pair<std::string, std::string>> edges;
    const int n = g.qubit_count();
    const int T = g.window_count();
    for (int t = 1; t <= T; ++t) {
        const BitMatrix& a = g.window_transfer(t);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (!a.get(static_cast<std::size_t>(j) - 1, static_cast<std::size_t>(i) - 1)) continue;
                if (t < T) {
                    edges.emplace_back(site_name({i, t}), site_name({j, t + 1}));
                } else {
                    edges.emplace_back(site_name({i, t}), readout_name(j));
                }
            }
        }
    }
    return render_edges(edges, format);
}

}  // namespace qprop
