#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace motsq::f2 {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words() const { return w_.size(); }
    const std::uint64_t* data() const { return w_.data(); }
    std::uint64_t* data() { return w_.data(); }

    bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v) w_[i / 64] |= std::uint64_t(1) << (i % 64);
        else w_[i / 64] &= ~(std::uint64_t(1) << (i % 64));
    }
    void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t(1) << (i % 64); }

    BitVector& operator^=(const BitVector& o);
    bool any() const;
    std::size_t count() const;
    std::optional<std::size_t> first() const;
    std::vector<std::size_t> ones() const;
    bool operator==(const BitVector&) const = default;
    std::string to_string() const;   // one character per coordinate, index 0 first

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }
    std::uint64_t* row(std::size_t r) { return data_.data() + r * stride_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * stride_; }

    bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1u; }
    void flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t(1) << (c % 64); }
    void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t(1) << (c % 64); }
    BitVector row_vector(std::size_t r) const;
    void swap_rows(std::size_t a, std::size_t b);
    void truncate_rows(std::size_t n);
    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> data_;
};

// Reduced row echelon form: rank rows, pivots[r] is the leading column of row r.
struct Rref {
    BitMatrix rows;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
    bool operator==(const Rref&) const = default;
};

// Gauss-Jordan with the per-pivot row sweep split across OpenMP threads.
Rref rref(BitMatrix m);

namespace reference {
// Serial forward elimination followed by back substitution.
Rref rref(BitMatrix m);
}  // namespace reference

// Clear every pivot column of e from v (v ends up in the canonical complement).
void reduce(BitVector& v, const Rref& e);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<BitVector> null_space(const BitMatrix& m);
std::vector<BitVector> null_space(const Rref& e);

// Echelon form built one sparse row at a time. Memory is rank x cols, not rows x cols.
class IncrementalRref {
public:
    explicit IncrementalRref(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    // Column indices of a row, each listed at most once. Returns true if the row was independent.
    bool add(const std::vector<std::uint32_t>& row);
    bool add(BitVector v);
    Rref finish() &&;   // same result as rref() on the stacked rows

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
    std::vector<long> pivot_row_;
};

}  // namespace motsq::f2
