#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qprop {

// Dense GF(2) vector, 64 bits per word, padding bits always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitVector from_bits(std::initializer_list<int> bits) {
        BitVector v(bits.size());
        std::size_t i = 0;
        for (int b : bits) v.set(i++, b != 0);
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        assert(i < size_);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    std::size_t popcount() const {
        std::size_t total = 0;
        for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    BitVector& operator^=(const BitVector& other) {
        assert(size_ == other.size_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    bool operator==(const BitVector&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense GF(2) matrix, row-major, 64 columns per word. Rows own whole words so
// row operations (the elimination hot path) are word-wide XORs.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), words_(rows * words_per_row_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return (words_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        assert(r < rows_ && c < cols_);
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        std::uint64_t& word = words_[r * words_per_row_ + (c >> 6)];
        if (value) {
            word |= mask;
        } else {
            word &= ~mask;
        }
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {words_.data() + r * words_per_row_, words_per_row_};
    }

    // row dst ^= row src
    void xor_rows(std::size_t dst, std::size_t src) {
        std::uint64_t* d = words_.data() + dst * words_per_row_;
        const std::uint64_t* s = words_.data() + src * words_per_row_;
        for (std::size_t i = 0; i < words_per_row_; ++i) d[i] ^= s[i];
    }

    // row dst |= row src
    void or_rows(std::size_t dst, std::size_t src) {
        std::uint64_t* d = words_.data() + dst * words_per_row_;
        const std::uint64_t* s = words_.data() + src * words_per_row_;
        for (std::size_t i = 0; i < words_per_row_; ++i) d[i] |= s[i];
    }

    void xor_row_from(std::size_t dst, const BitMatrix& src, std::size_t src_row) {
        assert(cols_ == src.cols_);
        std::uint64_t* d = words_.data() + dst * words_per_row_;
        const std::uint64_t* s = src.words_.data() + src_row * src.words_per_row_;
        for (std::size_t i = 0; i < words_per_row_; ++i) d[i] ^= s[i];
    }

    void or_row_from(std::size_t dst, const BitMatrix& src, std::size_t src_row) {
        assert(cols_ == src.cols_);
        std::uint64_t* d = words_.data() + dst * words_per_row_;
        const std::uint64_t* s = src.words_.data() + src_row * src.words_per_row_;
        for (std::size_t i = 0; i < words_per_row_; ++i) d[i] |= s[i];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::uint64_t* pa = words_.data() + a * words_per_row_;
        std::uint64_t* pb = words_.data() + b * words_per_row_;
        for (std::size_t i = 0; i < words_per_row_; ++i) std::swap(pa[i], pb[i]);
    }

    BitVector row(std::size_t r) const {
        BitVector v(cols_);
        for (std::size_t c = 0; c < cols_; ++c) v.set(c, get(r, c));
        return v;
    }

    std::size_t row_popcount(std::size_t r) const {
        std::size_t total = 0;
        for (std::uint64_t w : row_words(r)) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    std::size_t row_and_popcount(std::size_t a, std::size_t b) const {
        auto wa = row_words(a);
        auto wb = row_words(b);
        std::size_t total = 0;
        for (std::size_t i = 0; i < wa.size(); ++i) {
            total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
        }
        return total;
    }

    BitMatrix transposed() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> words_;
};

struct EliminationResult {
    BitMatrix echelon;                     // row-echelon form of the input rows
    BitVector rhs;                         // right-hand side transformed alongside
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;   // one pivot column per leading row, increasing
};

// b[i] = parity of (row i AND v). Throws std::invalid_argument on dimension mismatch.
BitVector mat_vec(const BitMatrix& m, const BitVector& v);

// Forward elimination on a copy of (m | b). Pivot rule: lowest-index nonzero
// column, first eligible row. Inputs are never mutated.
EliminationResult eliminate(const BitMatrix& m, const BitVector& b);

// One solution of m v = b with all free variables set to zero, or nullopt when
// b is outside the column space.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

// cols - rank
std::size_t kernel_dim(const BitMatrix& m);

}  // namespace qprop
