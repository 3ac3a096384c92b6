#pragma once

#include <string>
#include <vector>

#include "motsq/coeff.hpp"
#include "motsq/monomial.hpp"

namespace motsq {

// F2-sum of distinct normal-form monomials of the dual Steenrod algebra.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(Monomial m) : terms_{m} {}
    static AlgebraElement from_terms(std::vector<Monomial> terms);
    static AlgebraElement from_coeff(const MotivicCoeff& c);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BiDegree bidegree() const;   // throws on zero or inhomogeneous input

    AlgebraElement& operator+=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
    bool operator==(const AlgebraElement&) const = default;

    std::string to_string() const;

private:
    std::vector<Monomial> terms_;
};

// Product of two normal-form monomials; rewrites tau_k^2 lowest index first.
const AlgebraElement& multiply(Monomial x, Monomial y);

struct Generator {
    enum class Kind { Tau, Rho, Xi, TauK };
    Kind kind;
    int index = 0;   // i for xi_i, k for tau_k
};
using Word = std::vector<Generator>;

Word parse_word(const std::string& text);   // e.g. "T0 T1 T1", "t r x2"
AlgebraElement normalize(const Word& word);

BiDegree monomial_bidegree(Monomial m);

// eta_R on the coefficient ring: tau -> tau + rho tau_0, rho -> rho.
const AlgebraElement& right_unit(Monomial coeff);
AlgebraElement right_unit(const MotivicCoeff& c);

// m * eta_R(c) for a pure monomial m and coefficient monomial c.
const AlgebraElement& times_right_unit(Monomial m, Monomial c);

// Every pure monomial other than 1 with topological degree <= max_p, ordered by key.
const std::vector<Monomial>& pure_monomials(int max_p);

// Normal-form monomials of bidegree d; reduced drops tau^a rho^b * 1.
std::vector<Monomial> basis(BiDegree d, bool reduced);

}  // namespace motsq
