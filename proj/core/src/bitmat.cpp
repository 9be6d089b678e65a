#include "qprop/bitmat.hpp"

#include <stdexcept>

namespace qprop {

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (int bit : row) m.set(i, j++, bit != 0);
        ++i;
    }
    return m;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r, true);
        }
    }
    return t;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
    BitVector b(m.rows());
    const auto vw = v.words();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto rw = m.row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & vw[i];
        b.set(r, std::popcount(acc) & 1u);
    }
    return b;
}

EliminationResult eliminate(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("eliminate: dimension mismatch");
    EliminationResult res;
    res.echelon = m;
    res.rhs = b;
    BitMatrix& a = res.echelon;
    BitVector& rhs = res.rhs;

    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < a.rows() && !a.get(pivot, col)) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(lead, pivot);
        if (pivot != lead) {
            const bool tmp = rhs.get(lead);
            rhs.set(lead, rhs.get(pivot));
            rhs.set(pivot, tmp);
        }
        for (std::size_t r = lead + 1; r < a.rows(); ++r) {
            if (a.get(r, col)) {
                a.xor_rows(r, lead);
                if (rhs.get(lead)) rhs.flip(r);
            }
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    EliminationResult e = eliminate(m, b);
    // Zero rows must carry a zero right-hand side.
    for (std::size_t r = e.rank; r < m.rows(); ++r) {
        if (e.rhs.get(r)) return std::nullopt;
    }
    BitVector v(m.cols());
    // Back-substitution; free variables stay zero, so the accumulated parity of
    // each pivot row only involves variables already assigned.
    for (std::size_t i = e.rank; i-- > 0;) {
        const std::size_t col = e.pivot_cols[i];
        const auto rw = e.echelon.row_words(i);
        const auto vw = v.words();
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
        bool parity = std::popcount(acc) & 1u;
        // acc includes the pivot position itself, which is still zero in v.
        v.set(col, parity != e.rhs.get(i));
    }
    return v;
}

std::size_t kernel_dim(const BitMatrix& m) {
    return m.cols() - eliminate(m, BitVector(m.rows())).rank;
}

}  // namespace qprop
