#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "motsq/grading.hpp"

namespace motsq {

// tau^a rho^b with |tau| = (0,-1), |rho| = (-1,-1).
struct CoeffMonomial {
    int a = 0;
    int b = 0;

    BiDegree bidegree() const { return {-b, -a - b}; }
    CoeffMonomial operator*(CoeffMonomial o) const { return {a + o.a, b + o.b}; }
    auto operator<=>(const CoeffMonomial&) const = default;
    std::string to_string() const;
};

class MotivicCoeff {
public:
    MotivicCoeff() = default;
    MotivicCoeff(CoeffMonomial m) : terms_{m} {}
    static MotivicCoeff one() { return CoeffMonomial{0, 0}; }
    static MotivicCoeff tau() { return CoeffMonomial{1, 0}; }
    static MotivicCoeff rho() { return CoeffMonomial{0, 1}; }
    static MotivicCoeff from_terms(std::vector<CoeffMonomial> terms);

    const std::vector<CoeffMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BiDegree bidegree() const;

    MotivicCoeff& operator+=(const MotivicCoeff& o);
    friend MotivicCoeff operator+(MotivicCoeff x, const MotivicCoeff& y) { return x += y; }
    friend MotivicCoeff operator*(const MotivicCoeff& x, const MotivicCoeff& y);
    bool operator==(const MotivicCoeff&) const = default;

    std::string to_string() const;

private:
    std::vector<CoeffMonomial> terms_;   // sorted lexicographically on (a,b), distinct
};

// theta/(tau^i rho^j); theta itself is i = j = 0.
struct ConeSymbol {
    int i = 0;
    int j = 0;
    auto operator<=>(const ConeSymbol&) const = default;
    std::string to_string() const;
};

inline constexpr BiDegree kDefaultThetaDegree{2, 0};

class EquivariantCoeff {
public:
    EquivariantCoeff() = default;
    EquivariantCoeff(MotivicCoeff positive) : positive_(std::move(positive)) {}
    static EquivariantCoeff cone(ConeSymbol c);
    static EquivariantCoeff theta() { return cone({0, 0}); }

    const MotivicCoeff& positive() const { return positive_; }
    const std::vector<ConeSymbol>& cone_terms() const { return cone_; }
    bool is_zero() const { return positive_.is_zero() && cone_.empty(); }
    BiDegree bidegree(BiDegree theta_degree = kDefaultThetaDegree) const;

    EquivariantCoeff& operator+=(const EquivariantCoeff& o);
    friend EquivariantCoeff operator+(EquivariantCoeff x, const EquivariantCoeff& y) { return x += y; }
    friend EquivariantCoeff operator*(const EquivariantCoeff& x, const EquivariantCoeff& y);
    bool operator==(const EquivariantCoeff&) const = default;

    std::string to_string() const;

private:
    MotivicCoeff positive_;
    std::vector<ConeSymbol> cone_;   // sorted, distinct
};

using AnyCoeff = std::variant<MotivicCoeff, EquivariantCoeff>;

// Throws std::invalid_argument when the operands live in different rings.
AnyCoeff coeff_mul(const AnyCoeff& x, const AnyCoeff& y);
BiDegree coeff_bidegree(const AnyCoeff& x);

// The (at most one) motivic monomial of bidegree d.
std::vector<CoeffMonomial> coeff_basis(BiDegree d);

// Sort and cancel equal pairs: the canonical form of an F2-sum.
template <class T>
void cancel_pairs(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) % 2 == 1) {
            if (out != i) v[out] = std::move(v[i]);
            ++out;
        }
        i = j;
    }
    v.resize(out);
}

}  // namespace motsq
