#include "motsq/f2.hpp"

#include <bit>
#include <stdexcept>

namespace motsq::f2 {

BitVector& BitVector::operator^=(const BitVector& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVector::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::optional<std::size_t> BitVector::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return std::nullopt;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (std::uint64_t w = w_[i]; w; w &= w - 1) out.push_back(i * 64 + std::countr_zero(w));
    return out;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        std::copy(rows[r].data(), rows[r].data() + m.stride_, m.row(r));
    }
    return m;
}

BitVector BitMatrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy(row(r), row(r) + stride_, v.data());
    return v;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a), row(a) + stride_, row(b));
}

void BitMatrix::truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    data_.resize(rows_ * stride_);
}

namespace {

std::size_t find_pivot(const BitMatrix& m, std::size_t from, std::size_t col) {
    for (std::size_t r = from; r < m.rows(); ++r)
        if (m.get(r, col)) return r;
    return m.rows();
}

}  // namespace

Rref rref(BitMatrix m) {
    Rref out;
    const std::size_t rows = m.rows(), stride = m.stride();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < rows; ++col) {
        std::size_t piv = find_pivot(m, rank, col);
        if (piv == rows) continue;
        m.swap_rows(piv, rank);
        const std::size_t w0 = col / 64;
        const std::uint64_t bit = std::uint64_t(1) << (col % 64);
        const std::uint64_t* pr = m.row(rank);
        const long n = long(rows);
        const bool big = rows * (stride - w0) > 4096;
#pragma omp parallel for schedule(static) if (big)
        for (long i = 0; i < n; ++i) {
            if (std::size_t(i) == rank) continue;
            std::uint64_t* ri = m.row(std::size_t(i));
            if (ri[w0] & bit)
                for (std::size_t k = w0; k < stride; ++k) ri[k] ^= pr[k];
        }
        out.pivots.push_back(col);
        ++rank;
    }
    m.truncate_rows(rank);
    out.rows = std::move(m);
    return out;
}

namespace reference {

Rref rref(BitMatrix m) {
    Rref out;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = find_pivot(m, rank, col);
        if (piv == m.rows()) continue;
        m.swap_rows(piv, rank);
        for (std::size_t i = rank + 1; i < m.rows(); ++i)
            if (m.get(i, col))
                for (std::size_t k = 0; k < m.stride(); ++k) m.row(i)[k] ^= m.row(rank)[k];
        out.pivots.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r-- > 0;)
        for (std::size_t i = 0; i < r; ++i)
            if (m.get(i, out.pivots[r]))
                for (std::size_t k = 0; k < m.stride(); ++k) m.row(i)[k] ^= m.row(r)[k];
    m.truncate_rows(rank);
    out.rows = std::move(m);
    return out;
}

}  // namespace reference

void reduce(BitVector& v, const Rref& e) {
    if (v.size() != e.rows.cols()) throw std::invalid_argument("reduce: size mismatch");
    for (std::size_t r = 0; r < e.rank(); ++r)
        if (v.get(e.pivots[r])) {
            const std::uint64_t* pr = e.rows.row(r);
            for (std::size_t k = 0; k < v.words(); ++k) v.data()[k] ^= pr[k];
        }
}

std::vector<BitVector> null_space(const BitMatrix& m) { return null_space(rref(m)); }

std::vector<BitVector> null_space(const Rref& e) {
    const BitMatrix& m = e.rows;
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto p : e.pivots) is_pivot[p] = 1;
    std::vector<BitVector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector x(m.cols());
        x.set(f);
        for (std::size_t r = 0; r < e.rank(); ++r)
            if (e.rows.get(r, f)) x.set(e.pivots[r]);
        out.push_back(std::move(x));
    }
    return out;
}

bool IncrementalRref::add(const std::vector<std::uint32_t>& row) {
    BitVector v(cols_);
    for (auto c : row) v.flip(c);
    return add(std::move(v));
}

bool IncrementalRref::add(BitVector v) {
    if (v.size() != cols_) throw std::invalid_argument("IncrementalRref: size mismatch");
    // rows_ stay in semi-echelon form: row i leads with its pivot column
    std::size_t from = 0;
    for (;;) {
        std::size_t w = from / 64;
        std::uint64_t* d = v.data();
        std::uint64_t word = w < v.words() ? d[w] & (~std::uint64_t(0) << (from % 64)) : 0;
        while (!word && ++w < v.words()) word = d[w];
        if (w >= v.words()) return false;
        std::size_t lead = w * 64 + std::countr_zero(word);
        long r = pivot_row_[lead];
        if (r < 0) {
            pivot_row_[lead] = long(rows_.size());
            rows_.push_back(std::move(v));
            return true;
        }
        const std::uint64_t* pr = rows_[std::size_t(r)].data();
        for (std::size_t k = w; k < v.words(); ++k) d[k] ^= pr[k];
        from = lead + 1;
    }
}

Rref IncrementalRref::finish() && {
    Rref out;
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_row_[c] >= 0) {
            out.pivots.push_back(c);
            order.push_back(std::size_t(pivot_row_[c]));
        }
    std::vector<BitVector> sorted;
    sorted.reserve(order.size());
    for (auto r : order) sorted.push_back(std::move(rows_[r]));
    rows_.clear();
    // back substitution, last pivot first
    for (std::size_t r = sorted.size(); r-- > 0;) {
        std::size_t pc = out.pivots[r];
        const BitVector& pr = sorted[r];
        const long n = long(r);
#pragma omp parallel for schedule(static) if (n > 256)
        for (long i = 0; i < n; ++i) {
            BitVector& x = sorted[std::size_t(i)];
            if (x.get(pc))
                for (std::size_t k = pc / 64; k < x.words(); ++k) x.data()[k] ^= pr.data()[k];
        }
    }
    out.rows = BitMatrix::from_rows(sorted, cols_);
    return out;
}

}  // namespace motsq::f2
