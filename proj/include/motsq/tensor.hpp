#pragma once

#include <span>
#include <string>
#include <vector>

#include "motsq/algebra.hpp"

namespace motsq {

// coeff * [m_1 | ... | m_n] with every m_i pure; coefficients sit leftmost.
struct TensorTerm {
    Monomial coeff;
    std::vector<Monomial> slots;

    BiDegree degree() const;
    bool has_unit_slot() const;
    auto operator<=>(const TensorTerm&) const = default;
    std::string to_string() const;
};

struct TensorTermHash {
    std::size_t operator()(const TensorTerm& t) const noexcept;
};

// F2-sum of tensor terms of a common arity, in normal form over M2.
class TensorElement {
public:
    TensorElement() = default;
    explicit TensorElement(TensorTerm t) : terms_{std::move(t)} {}
    static TensorElement from_terms(std::vector<TensorTerm> terms);

    const std::vector<TensorTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    TensorElement& operator+=(const TensorElement& o);
    friend TensorElement operator+(TensorElement x, const TensorElement& y) { return x += y; }
    bool operator==(const TensorElement&) const = default;

    std::string to_string() const;

private:
    std::vector<TensorTerm> terms_;   // sorted, distinct
};

// [slots] with coefficient c placed to their right, moved to the left through eta_R.
TensorElement push_left(std::span<const Monomial> slots, Monomial c);

// Juxtaposition x|y: the product of the tensor algebra over M2 (the cobar product).
TensorElement concat(const TensorElement& x, const TensorElement& y);

// Normal form of lead * (s_1 | ... | s_n) with arbitrary slot entries.
TensorElement normalize_tensor(const AlgebraElement& lead, std::span<const AlgebraElement> slots);

// Slotwise product in the ring Gamma^{(x)n}.
TensorElement slot_product(const TensorElement& x, const TensorElement& y);

const TensorElement& coproduct(Monomial pure);
const TensorElement& reduced_coproduct(Monomial pure);   // Delta - m|1 - 1|m
TensorElement coproduct(const AlgebraElement& x);

// (Delta applied to slot j) of an arity-n tensor, giving arity n+1.
TensorElement apply_coproduct(const TensorElement& x, std::size_t j);

// The (pieces - 1)-fold iterated coproduct, arity = pieces.
const TensorElement& iterated_coproduct(Monomial pure, int pieces);

// (eps (x) id) and (id (x) eps) on arity-2 tensors.
AlgebraElement counit_left(const TensorElement& x);
AlgebraElement counit_right(const TensorElement& x);

}  // namespace motsq
