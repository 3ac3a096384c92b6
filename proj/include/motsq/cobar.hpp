#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "motsq/f2.hpp"
#include "motsq/grading.hpp"
#include "motsq/tensor.hpp"

namespace motsq {

using CobarTerm = TensorTerm;

TriDegree tridegree(const CobarTerm& t);

// Homogeneous F2-chain of the reduced cobar complex M2 (x) Abar^{(x)s}.
class CobarElement {
public:
    CobarElement() = default;
    explicit CobarElement(TriDegree t) : t_(t) {}
    CobarElement(TriDegree t, TensorElement x);   // throws if a term has the wrong degree or a unit slot
    static CobarElement from_term(const CobarTerm& term) { return CobarElement(motsq::tridegree(term), TensorElement(term)); }

    TriDegree tridegree() const { return t_; }
    const TensorElement& tensor() const { return x_; }
    const std::vector<CobarTerm>& terms() const { return x_.terms(); }
    bool is_zero() const { return x_.is_zero(); }

    CobarElement& operator+=(const CobarElement& o);
    friend CobarElement operator+(CobarElement x, const CobarElement& y) { return x += y; }
    bool operator==(const CobarElement&) const = default;
    std::string to_string() const { return x_.to_string(); }

private:
    TriDegree t_;
    TensorElement x_;
};

TensorElement cobar_differential(const CobarTerm& t);
TensorElement cobar_differential(const TensorElement& x);
CobarElement differential(const CobarElement& x);
CobarElement cobar_product(const CobarElement& x, const CobarElement& y);

// Number of basis elements of C^s(p,q), computed without enumerating them.
std::uint64_t cobar_dimension(TriDegree t);

enum class BasisOrder { Natural, Reversed };

struct CobarBasis {
    TriDegree t;
    std::vector<CobarTerm> terms;
    std::unordered_map<CobarTerm, std::uint32_t, TensorTermHash> index;
    std::uint64_t hash = 0;

    std::size_t size() const { return terms.size(); }
};

class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Per-tridegree bases and differential matrices, cached and safe to share between threads.
class CobarComplex {
public:
    explicit CobarComplex(BasisOrder order = BasisOrder::Natural, std::uint64_t max_basis = 3'000'000,
                          std::uint64_t sparse_threshold = 8192)
        : order_(order), max_basis_(max_basis), sparse_threshold_(sparse_threshold) {}

    BasisOrder order() const { return order_; }
    const CobarBasis& basis(TriDegree t);

    f2::BitVector coordinates(const CobarElement& x);   // throws if a term is outside the basis
    CobarElement element(TriDegree t, const f2::BitVector& coords);

    // Rows indexed by C^{s+1}, columns by C^s: the kernel of this matrix is the cycle space.
    f2::BitMatrix differential_transpose(TriDegree t);
    // One row per element of C^{s-1}, expressed in C^s coordinates.
    f2::BitMatrix boundary_rows(TriDegree t);

    // RREF of the two matrices above. Above sparse_threshold columns the rows are fed
    // one at a time from sparse column lists instead of building the dense matrix.
    f2::Rref differential_rref(TriDegree t);
    f2::Rref boundary_rref(TriDegree t);
    bool sparse(TriDegree t) { return basis(t).size() > sparse_threshold_; }

private:
    std::vector<std::vector<std::uint32_t>> differential_columns(TriDegree t);

    BasisOrder order_;
    std::uint64_t max_basis_;
    std::uint64_t sparse_threshold_;
    std::mutex mu_;
    std::map<TriDegree, std::unique_ptr<CobarBasis>> bases_;
};

std::vector<CobarTerm> enumerate_cobar_basis(TriDegree t);
// Visits the basis in enumeration order without storing it; fn returns false to stop early.
bool for_each_cobar_term(TriDegree t, const std::function<bool(const CobarTerm&)>& fn);

}  // namespace motsq
