#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "motsq/coeff.hpp"
#include "motsq/grading.hpp"

namespace motsq {

// Largest admissible index for xi_i and tau_k. Process-wide; defaults to 6.
int generator_cap();
void set_generator_cap(int cap);

inline constexpr int kMaxGeneratorIndex = 6;

/* A normal-form monomial tau^a rho^b xi_1^e1 ... xi_6^e6 tau_0^f0 ... tau_7^f7
   (f_k in {0,1}) packed into one word:
     bits  0..7   a          bits 16..23  tau_k mask
     bits  8..15  b          bits 24..59  e_1..e_6, 6 bits each  */
class Monomial {
public:
    constexpr Monomial() = default;
    static constexpr Monomial from_key(std::uint64_t k) { Monomial m; m.key_ = k; return m; }

    static Monomial coeff(int a, int b);
    static Monomial coeff(CoeffMonomial c) { return coeff(c.a, c.b); }
    static Monomial xi(int i, int e = 1);
    static Monomial tau(int k);

    std::uint64_t key() const { return key_; }
    int tau_exp() const { return int(key_ & 0xff); }
    int rho_exp() const { return int((key_ >> 8) & 0xff); }
    unsigned tau_mask() const { return unsigned((key_ >> 16) & 0xff); }
    bool has_tau(int k) const { return (tau_mask() >> k) & 1u; }
    int xi_exp(int i) const { return int((key_ >> (24 + 6 * (i - 1))) & 0x3f); }

    Monomial coeff_part() const { return from_key(key_ & 0xffff); }
    Monomial pure_part() const { return from_key(key_ & ~std::uint64_t(0xffff)); }
    CoeffMonomial coeff_monomial() const { return {tau_exp(), rho_exp()}; }
    bool is_one() const { return key_ == 0; }
    bool is_coeff() const { return pure_part().is_one(); }   // tau^a rho^b only

    Monomial without_tau(int k) const { return from_key(key_ & ~(std::uint64_t(1) << (16 + k))); }

    BiDegree degree() const;
    // P - Q of the pure part: the amount it contributes to p - q.
    int excess() const { BiDegree d = pure_part().degree(); return d.p - d.q; }

    auto operator<=>(const Monomial&) const = default;
    std::string to_string() const;

private:
    std::uint64_t key_ = 0;
};

// Product of monomials with disjoint tau masks (no relation applies).
// Throws std::overflow_error when an exponent field would overflow.
Monomial combine(Monomial x, Monomial y);

// m / gen for a generator power gen dividing m.
Monomial divide_generator(Monomial m, Monomial gen);

BiDegree xi_degree(int i);
BiDegree tau_degree(int k);

struct MonomialHash {
    std::size_t operator()(Monomial m) const noexcept { return std::hash<std::uint64_t>{}(m.key()); }
};

}  // namespace motsq
