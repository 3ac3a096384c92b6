#include <random>

#include "test_util.hpp"
#include "motsq/equivariant.hpp"
#include "oracle/naive.hpp"

using namespace motsq;

namespace {

// Image in the motivic algebra under alpha -> tau + rho tau_0.
naive::Elem motivic_image(const EqElement& x) {
    naive::Elem out;
    naive::Mono t; t.a = 1;
    naive::Mono rt0; rt0.b = 1; rt0.t[0] = 1;
    for (const auto& m : x.terms()) {
        naive::Mono base;
        base.a = m.tau;
        base.b = m.rho;
        for (int i = 0; i < 8; ++i) { base.xi[i] = m.xi[i]; base.t[i] = m.tk[i]; }
        naive::Elem term = naive::reduce(base);
        for (int i = 0; i < m.alpha; ++i) term = naive::mul(term, {t, rt0});
        naive::add(out, term);
    }
    return out;
}

}  // namespace

TEST_CASE("equivariant relations") {
    CHECK(equivariant_normalize("T0 r").to_string() == "a + t");
    CHECK(equivariant_normalize("T0 T0").to_string() == "a x1 + r T1");
    CHECK(equivariant_normalize("x2 a").to_string() == "a x2");
    CHECK_THROWS_AS(equivariant_normalize("t Q"), std::invalid_argument);
    CHECK(equivariant_normalize("a").terms()[0].degree() == BiDegree{0, -1});
}

TEST_CASE("equivariant rewriting is confluent and sound") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(1, 6), kind(0, 4), idx(0, 3);
    const char* coeffs[] = {"t", "r", "a"};
    for (int trial = 0; trial < 200; ++trial) {
        std::string w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            int k = kind(rng);
            if (k < 3) w += std::string(coeffs[k]) + " ";
            else if (k == 3) w += "x" + std::to_string(idx(rng) + 1) + " ";
            else w += "T" + std::to_string(idx(rng)) + " ";
        }
        auto word = parse_eq_word(w);
        EqElement fixed = equivariant_normalize(word);
        EqElement random = equivariant_normalize(word, RewriteOrder::Random, &rng);
        CHECK_MESSAGE(fixed == random, w);
        for (const auto& m : fixed.terms()) CHECK(is_equivariant_normal(m));
        EqElement raw = EqElement::from_terms({[&] {
            EqMonomial m;
            for (const auto& g : word) {
                m.tau += g.tau; m.rho += g.rho; m.alpha += g.alpha;
                for (int i = 0; i < 8; ++i) { m.xi[i] += g.xi[i]; m.tk[i] += g.tk[i]; }
            }
            return m;
        }()});
        CHECK(motivic_image(fixed) == motivic_image(raw));
        if (!fixed.is_zero()) {
            BiDegree d = fixed.terms()[0].degree();
            for (const auto& m : fixed.terms()) CHECK(m.degree() == d);
        }
    }
}

TEST_CASE("critical pair of rho tau_0 and tau_0^2 resolves") {
    // rho tau_0^2 -> rho^2 tau_1 + rho alpha xi_1 via tau_0^2, or alpha tau_0 + tau tau_0 via rho tau_0;
    // the second only closes up through the alpha tau_0 rule.
    std::mt19937 rng(5);
    EqElement expected = EqElement::from_terms(
        {equivariant_normalize("r^2 T1").terms().at(0), equivariant_normalize("r a x1").terms().at(0)});
    for (int i = 0; i < 20; ++i)
        CHECK(equivariant_normalize(parse_eq_word("r T0 T0"), RewriteOrder::Random, &rng) == expected);
}
