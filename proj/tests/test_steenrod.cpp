#include <random>

#include "test_util.hpp"
#include "motsq/steenrod.hpp"

using namespace motsq;

namespace {

Range sq_range() { return Range{4, -4, 16, -4, 8}; }

CobarElement T(std::initializer_list<Monomial> slots, Monomial c = Monomial{}) {
    return CobarElement::from_term({c, std::vector<Monomial>(slots)});
}

// Small random chains: sums of basis terms in one tridegree.
CobarElement random_chain(CobarComplex& c, TriDegree t, std::mt19937& rng) {
    CobarElement out(t);
    for (const auto& term : c.basis(t).terms)
        if (rng() % 3 == 0) out += CobarElement::from_term(term);
    return out;
}

}  // namespace

TEST_CASE("cup zero is the cobar product") {
    CobarComplex c;
    std::mt19937 rng(3);
    for (TriDegree a : {TriDegree{1, 3, 1}, TriDegree{1, 2, 0}, TriDegree{2, 4, 2}})
        for (TriDegree b : {TriDegree{1, 2, 1}, TriDegree{1, 3, 1}, TriDegree{2, 3, 1}}) {
            auto x = random_chain(c, a, rng), y = random_chain(c, b, rng);
            CHECK(cup(0, x, y) == cobar_product(x, y));
        }
}

TEST_CASE("coface along the identity and the end inclusions") {
    TensorTerm x{Monomial::coeff(1, 0), {Monomial::xi(1), Monomial::tau(0)}};
    std::vector<int> id{0, 1, 2};
    CHECK(coface(x, id, 2) == TensorElement(x));
    std::vector<int> front{0, 1, 2};
    auto r = coface(x, front, 3);
    CHECK(r == concat(TensorElement(x), TensorElement(TensorTerm{Monomial{}, {Monomial{}}})));
    std::vector<int> back{1, 2, 3};
    CHECK(coface(x, back, 3) == concat(TensorElement(TensorTerm{Monomial{}, {Monomial{}}}), TensorElement(x)));
    std::vector<int> bad{0, 0, 1};
    CHECK_THROWS_AS(coface(x, bad, 3), std::invalid_argument);
}

TEST_CASE("cup-k coboundary formula") {
    // d(x u_k y) = dx u_k y + x u_k dy + x u_{k-1} y + y u_{k-1} x
    CobarComplex c;
    std::mt19937 rng(11);
    std::vector<TriDegree> degs{{1, 2, 1}, {1, 3, 1}, {1, 4, 2}, {2, 4, 2}, {2, 5, 2}, {1, 3, 2}, {2, 3, 1}, {0, 1, 0}};
    int checked = 0;
    for (auto a : degs)
        for (auto b : degs)
            for (int k = 1; k <= std::min(a.s, b.s) + 1; ++k) {
                auto x = random_chain(c, a, rng), y = random_chain(c, b, rng);
                if (a.s + b.s - k < 0) continue;
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(k);
                CobarElement lhs = differential(cup(k, x, y));
                CobarElement rhs = cup(k, differential(x), y);
                rhs += cup(k, x, differential(y));
                rhs += cup(k - 1, x, y);
                rhs += cup(k - 1, y, x);
                CHECK(lhs == rhs);
                ++checked;
            }
    CHECK(checked > 100);
}

TEST_CASE("sq on named classes") {
    ExtEngine e(sq_range());
    auto h = [&](const std::string& n) { return *e.named(n); };
    CHECK(sq(e, 0, h("h1")).same_class(h("h2")));
    CHECK(sq(e, 0, h("h2")).same_class(h("h3")));
    CHECK(sq(e, 1, h("h1")).same_class(e.product(h("h1"), h("h1"))));
    CHECK(!sq(e, 1, h("h1")).is_zero());
    CHECK(sq(e, 2, h("h1")).is_zero());
    CHECK(sq(e, -1, h("h1")).is_zero());
    CHECK(sq(e, 0, h("1")).same_class(h("1")));
    CHECK(sq(e, 0, h("rho")).same_class(e.product(h("rho"), h("rho"))));
    auto t = sq(e, 1, h("h2"));
    CHECK(t.t == TriDegree{2, 8, 4});
    CHECK(sq(e, 0, h("h3")).same_class(h("h4")));
    CHECK_THROWS_AS(sq(e, 0, h("h4")), OutOfRange);
}

TEST_CASE("sq^0 h0 and the top operation on Ext^1") {
    ExtEngine e(sq_range());
    auto h0 = *e.named("h0"), rho = *e.named("rho"), h1 = *e.named("h1");
    // sq^0 of the class tau_0 lands in Ext^{1,2,0}
    auto s0 = sq(e, 0, h0);
    CHECK(s0.t == TriDegree{1, 2, 0});
    CHECK(sq(e, 1, h0).same_class(e.product(h0, h0)));
    auto rh1 = e.product(rho, h1);
    CHECK(sq(e, 1, rh1).same_class(e.product(rh1, rh1)));
}

TEST_CASE("sq^s is the square for every named class in range") {
    ExtEngine e(sq_range());
    for (const auto& [name, x] : e.name_generators()) {
        TriDegree t = sq_target(x.t.s, x.t);
        if (!e.range().contains(t)) continue;
        CAPTURE(name);
        CHECK(sq(e, x.t.s, x).same_class(e.product(x, x)));
    }
}

TEST_CASE("sq is well defined on classes") {
    ExtEngine e(sq_range());
    std::mt19937 rng(2024);
    for (const auto& [name, x] : e.name_generators()) {
        if (x.t.s == 0) continue;
        for (int i = 0; i <= x.t.s; ++i) {
            TriDegree t = sq_target(i, x.t);
            if (!e.range().contains(t)) continue;
            ExtClass base = sq(e, i, x);
            TriDegree lower{x.t.s - 1, x.t.p, x.t.q};
            for (int trial = 0; trial < 10; ++trial) {
                CobarElement w = random_chain(e.complex(), lower, rng);
                CobarElement z = e.representative(x) + differential(w);
                PhiMap phi;
                CobarElement v = phi.apply(x.t.s - i, z, z);
                CAPTURE(name);
                CAPTURE(i);
                CHECK(e.classify(v).same_class(base));
            }
        }
    }
}

TEST_CASE("sq is additive on Ext^1") {
    ExtEngine e(sq_range());
    for (TriDegree t : {TriDegree{1, 1, 0}, TriDegree{1, 2, 1}, TriDegree{1, 3, 1}, TriDegree{1, 4, 2}, TriDegree{1, 1, -1}}) {
        const auto& g = e.group(t);
        for (int i = 0; i <= 1; ++i)
            for (std::size_t a = 0; a < g.dim(); ++a)
                for (std::size_t b = 0; b < g.dim(); ++b) {
                    auto x = e.basis_class(t, a), y = e.basis_class(t, b);
                    CHECK(sq(e, i, e.sum(x, y)).same_class(e.sum(sq(e, i, x), sq(e, i, y))));
                }
    }
}

TEST_CASE("phi lift verifies, detects faults and round-trips") {
    CHECK(verify_phi(PhiMap{}).empty());
    std::vector<CobarElement> inputs{T({Monomial::xi(1)}), T({Monomial::tau(0)}), T({Monomial::xi(1, 2)})};
    PhiMap phi = lift_phi(2, inputs);
    CHECK(phi.size() > 0);
    CHECK(phi.max_k() == 1);
    CHECK(verify_phi(phi).empty());

    PhiEntry e00{0, false, inputs[1].terms()[0], inputs[1].terms()[0]};
    CHECK(phi.value(e00) == T({Monomial::tau(0), Monomial::tau(0)}));
    PhiEntry e11{1, false, inputs[0].terms()[0], inputs[0].terms()[0]};
    CHECK(phi.value(e11) == T({Monomial::xi(1, 2)}));
    // d Phi(e_1, x1, x1) = Phi(e_0 (1+T), x1, x1) = 0
    CHECK(differential(phi.value(e11)).is_zero());

    PhiMap copy = PhiMap::from_json(phi.to_json());
    CHECK(copy == phi);
    CHECK(verify_phi(copy).empty());

    PhiMap bad = phi;
    PhiEntry target{1, false, inputs[0].terms()[0], inputs[2].terms()[0]};
    REQUIRE(bad.contains(target));
    bad.set(target, bad.value(target) + T({Monomial::xi(1, 3)}));
    auto report = verify_phi(bad);
    REQUIRE(!report.empty());
    bool located = false;
    for (const auto& r : report)
        if (r.entry == target) located = r.chain_terms > 0 && r.equivariance_terms > 0;
    CHECK(located);
    CHECK_THROWS_AS(PhiMap::from_json("{}"), std::runtime_error);
    CHECK_THROWS_AS(PhiMap::from_json("not json"), std::runtime_error);
}
