#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qprop/bitmat.hpp"
#include "qprop/circuit.hpp"

namespace qprop {

// Injection site: error appears on `qubit` at the start of `window`, before
// that window's gates act. 1-based, matching circuit indices.
struct SiteId {
    int qubit = 0;
    int window = 0;
    bool operator==(const SiteId&) const = default;
};

// Parity observation on `qubit` after the final window.
struct ReadoutId {
    int qubit = 0;
    bool operator==(const ReadoutId&) const = default;
};

// Per-window GF(2) transfer matrices: A_t[j][i] = 1 iff an error present on
// qubit i at the start of window t is present on qubit j at the start of
// window t+1. A window's matrix is the ordered product of its gate updates.
class Epstg {
public:
    Epstg(int n, int T, std::vector<BitMatrix> window_transfer)
        : n_(n), T_(T), transfer_(std::move(window_transfer)) {}

    int qubit_count() const { return n_; }
    int window_count() const { return T_; }

    // t in [1, T]
    const BitMatrix& window_transfer(int t) const { return transfer_[static_cast<std::size_t>(t) - 1]; }

private:
    int n_;
    int T_;
    std::vector<BitMatrix> transfer_;
};

Epstg build_epstg(const Circuit& c);

// ParityExact: M[i][s] = 1 iff an error injected at site s flips readout i
// (path multiplicities cancel over GF(2)). PathExistence: M[i][s] = 1 iff a
// directed path exists from s to readout i, i.e. pure reachability. The two
// coincide whenever every site-to-readout path is unique.
enum class RsgMode { ParityExact, PathExistence };

// Bipartite source-to-readout map as an n x (nT) GF(2) matrix. Columns are
// window-major internally: site (q, t) lives at column (t-1)*n + (q-1).
class Rsg {
public:
    Rsg(BitMatrix m, int n, int T, RsgMode mode) : m_(std::move(m)), n_(n), T_(T), mode_(mode) {}

    const BitMatrix& matrix() const { return m_; }
    int readout_count() const { return n_; }
    int window_count() const { return T_; }
    std::size_t site_count() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(T_); }
    RsgMode mode() const { return mode_; }

    std::size_t column_of(SiteId s) const {
        return static_cast<std::size_t>(s.window - 1) * n_ + static_cast<std::size_t>(s.qubit - 1);
    }
    SiteId site_of(std::size_t col) const {
        return {static_cast<int>(col % n_) + 1, static_cast<int>(col / n_) + 1};
    }

    // Display permutation matching the qubit-major column convention used for
    // worked matrices: entry d of the result is the internal column of the
    // d-th qubit-major site (q ordered first, then t).
    std::vector<std::size_t> qubit_major_columns() const;

    std::size_t readout_degree(int qubit) const { return m_.row_popcount(static_cast<std::size_t>(qubit) - 1); }
    std::size_t shared_degree(int qubit_a, int qubit_b) const {
        return m_.row_and_popcount(static_cast<std::size_t>(qubit_a) - 1, static_cast<std::size_t>(qubit_b) - 1);
    }

private:
    BitMatrix m_;
    int n_;
    int T_;
    RsgMode mode_;
};

Rsg build_rsg(const Epstg& g, RsgMode mode = RsgMode::ParityExact);

// The fully connected RSG (all-ones matrix), built directly; no gate list
// realizes it for general n.
Rsg gen_complete_rsg(int n, int T);

// One connected block of the bipartite graph induced by nonzero entries.
struct Component {
    std::vector<int> readouts;          // 1-based qubit indices, sorted
    std::vector<std::size_t> columns;   // internal column indices, sorted
};

// Components partition the readout rows; all-zero columns belong to none.
struct ComponentPartition {
    std::vector<Component> components;
};

ComponentPartition components(const Rsg& rsg);

enum class GraphFormat { Dot, JsonEdges };

// Deterministic vertex naming Q{q}[{t}] for sites and R{q} for readouts;
// edges ordered by source column, then readout.
std::string export_graph(const Rsg& rsg, GraphFormat format);
std::string export_graph(const Epstg& g, GraphFormat format);

}  // namespace qprop
