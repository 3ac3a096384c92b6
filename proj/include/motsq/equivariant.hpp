#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "motsq/grading.hpp"

namespace motsq {

// Monomial of the C2-equivariant dual Steenrod algebra (positive coefficients only):
// tau^a rho^b alpha^c xi^e tau_k^f, with alpha of bidegree (0,-1).
struct EqMonomial {
    int tau = 0, rho = 0, alpha = 0;
    std::array<int, 8> xi{};    // xi[1..7]
    std::array<int, 8> tk{};    // tau_k exponents

    BiDegree degree() const;
    auto operator<=>(const EqMonomial&) const = default;
    std::string to_string() const;
};

class EqElement {
public:
    EqElement() = default;
    EqElement(EqMonomial m) : terms_{m} {}
    static EqElement from_terms(std::vector<EqMonomial> terms);
    const std::vector<EqMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const EqElement&) const = default;
    std::string to_string() const;

private:
    std::vector<EqMonomial> terms_;
};

/* Rewrite rules, oriented by the weights rho = tau = xi_i = 1, alpha = tau_i = 4 (i >= 1), tau_0 = 5:
     rho tau_0    -> alpha + tau
     tau_i^2      -> rho tau_{i+1} + alpha xi_{i+1}
     alpha tau_0  -> tau tau_0 + rho^2 tau_1 + rho alpha xi_1
     alpha^2      -> tau^2 + rho^3 tau_1 + rho^2 alpha xi_1
   The last two follow from the first two and make the system confluent. */
enum class RewriteOrder { Fixed, Random };

// Word tokens: t, r, a (alpha), x<i>, T<k>, with optional ^e. Cone symbols are rejected.
std::vector<EqMonomial> parse_eq_word(const std::string& text);
EqElement equivariant_normalize(const std::vector<EqMonomial>& word, RewriteOrder order = RewriteOrder::Fixed,
                                std::mt19937* rng = nullptr);
EqElement equivariant_normalize(const std::string& word);

bool is_equivariant_normal(const EqMonomial& m);

}  // namespace motsq
