// Acceptance run: one PASS/FAIL line per criterion, details indented below.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "motsq/cells.hpp"
#include "motsq/diff.hpp"
#include "motsq/steenrod.hpp"
#include "motsq/tensor.hpp"
#include "oracle/naive.hpp"

using namespace motsq;
using clk = std::chrono::steady_clock;

namespace {

// Pinned limits.
const Range kRange{5, -2, 20, -2, 10};
constexpr double kCorollarySeconds = 600.0;
constexpr double kDefaultDdBudget = 120.0;
constexpr int kPerturbations = 10;
constexpr int kMinOracleDegrees = 150;

double since(clk::time_point t0) { return std::chrono::duration<double>(clk::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what) {
        if (!ok) pass = false;
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { lines.push_back("     " + what); }
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o) {
    std::printf("%s  %d. %s\n", o.pass ? "PASS" : "FAIL", n, title.c_str());
    for (const auto& l : o.lines) std::printf("        %s\n", l.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

template <class F>
Outcome guarded(F&& f) {
    Outcome o;
    try {
        f(o);
    } catch (const std::exception& e) {
        o.check(false, std::string("exception: ") + e.what());
    }
    return o;
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome corollary() {
    return guarded([](Outcome& o) {
        auto t0 = clk::now();
        ExtEngine e(kRange);
        auto s1 = d2_on_sq(e, "h1", 1);
        auto s2 = d2_on_sq(e, "h2", 1);
        auto s3 = d2_on_sq(e, "h3", 1);
        double secs = since(t0);

        o.check(s1.evaluated && s1.target_zero() && s1.target_t == TriDegree{3, 5, 2} &&
                    s1.to_string().rfind("d2(h2) = h0 h1^2 = 0", 0) == 0,
                "d2(h2) = h0 h1^2 = 0 in Ext^3.5.2");
        o.check(s2.evaluated && s2.target_zero() && s2.target_t == TriDegree{3, 9, 4} &&
                    s2.coeff == AlphaCoefficient{true, true} &&
                    s2.to_string().rfind("d2(h3) = (h0 + rho h1) h2^2 = 0", 0) == 0,
                "d2(h3) = (h0 + rho h1) h2^2 = 0 in Ext^3.9.4");

        auto h0 = *e.named("h0"), h1 = *e.named("h1"), h3 = *e.named("h3");
        auto h3sq = e.product(h3, h3);
        bool h1h3sq_zero = e.product(h1, h3sq).is_zero();
        o.check(h1h3sq_zero && e.product(h1, h3sq).t == TriDegree{3, 18, 9}, "h1 h3^2 = 0 in Ext^3.18.9");
        bool fact = std::find(s3.facts.begin(), s3.facts.end(), "h1 h3^2 = 0 in Ext^3.18.9") != s3.facts.end();
        o.check(s3.evaluated && !s3.target_zero() && s3.target_t == TriDegree{3, 17, 8} && fact &&
                    s3.value->same_class(e.product(h0, h3sq)) &&
                    s3.to_string().rfind("d2(h4) = (h0 + rho h1) h3^2 = h0 h3^2 != 0", 0) == 0,
                "d2(h4) = (h0 + rho h1) h3^2 = h0 h3^2 != 0 in Ext^3.17.8");
        o.check(secs <= kCorollarySeconds, fmt("runtime %.2f s (limit %.0f s)", secs, kCorollarySeconds));
        o.note(s3.to_string().substr(0, s3.to_string().find('\n')));
    });
}

Outcome sq0_through_phi() {
    return guarded([](Outcome& o) {
        ExtEngine e(kRange);
        std::vector<CobarElement> inputs;
        for (const char* n : {"h1", "h2", "h3"}) inputs.push_back(e.representative(*e.named(n)));
        PhiMap phi = lift_phi(2, inputs);
        auto residual = verify_phi(phi);
        o.check(residual.empty(), fmt("Phi lift: %zu entries, %zu residuals", phi.size(), residual.size()));
        for (int n = 1; n <= 3; ++n) {
            std::string x = "h" + std::to_string(n), y = "h" + std::to_string(n + 1);
            ExtClass s = sq(e, 0, *e.named(x), &phi);
            o.check(!s.is_zero() && s.same_class(*e.named(y)), "sq0(" + x + ") = " + y);
        }
        o.check(verify_phi(phi).empty(), fmt("Phi map after use: %zu entries verified", phi.size()));
    });
}

// d o d on every basis element, smallest tridegrees first, under a wall-clock budget.
void dd_check(Outcome& o, double budget) {
    std::vector<std::pair<std::uint64_t, TriDegree>> degrees;
    std::uint64_t total = 0;
    for (int s = 0; s <= kRange.max_s; ++s)
        for (int p = kRange.min_p; p <= kRange.max_p; ++p)
            for (int q = kRange.min_q; q <= kRange.max_q; ++q) {
                TriDegree t{s, p, q};
                std::uint64_t n = cobar_dimension(t);
                if (!n) continue;
                degrees.push_back({n, t});
                total += n;
            }
    std::sort(degrees.begin(), degrees.end());

    auto t0 = clk::now();
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> checked{0}, bad{0};
    std::atomic<std::size_t> complete{0};
    std::string first_bad;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        if (stop) continue;
        std::uint64_t local = 0;
        bool done = for_each_cobar_term(degrees[k].second, [&](const CobarTerm& term) {
            if (!cobar_differential(cobar_differential(term)).is_zero()) {
                if (bad++ == 0) {
#pragma omp critical
                    first_bad = CobarElement::from_term(term).to_string();
                }
            }
            if ((++local & 63) == 0) {
                checked += 64;
                if (budget > 0 && since(t0) > budget) stop = true;
            }
            return !stop.load();
        });
        checked += local & 63;
        if (done) ++complete;
    }
    double secs = since(t0);
    bool all = complete == degrees.size();
    o.check(bad == 0, fmt("d o d = 0 on %llu elements checked (%.1f s, %d threads)",
                          (unsigned long long)checked.load(), secs, omp_get_max_threads()) +
                          (bad ? ", first failure " + first_bad : std::string()));
    o.check(all, fmt("coverage %llu / %llu elements, %zu / %zu tridegrees (%.4f%%)",
                     (unsigned long long)checked.load(), (unsigned long long)total, complete.load(), degrees.size(),
                     100.0 * double(checked) / double(total)));
    if (!all) {
        std::uint64_t left = total - checked;
        double rate = secs / double(std::max<std::uint64_t>(checked, 1));
        o.note(fmt("budget %.0f s exhausted; about %.1f CPU-hours left at the mean rate so far (run with --full)", budget,
                   rate * double(left) * omp_get_max_threads() / 3600.0));
    }
}

Outcome properties(double budget) {
    return guarded([&](Outcome& o) {
        // Hopf algebroid identities on pure monomials.
        std::size_t counit_bad = 0, coassoc_bad = 0;
        const auto& monos = pure_monomials(kRange.max_p);
        for (auto m : monos) {
            const auto& d = coproduct(m);
            if (counit_left(d) != AlgebraElement(m) || counit_right(d) != AlgebraElement(m)) ++counit_bad;
            if (apply_coproduct(d, 0) != apply_coproduct(d, 1)) ++coassoc_bad;
        }
        o.check(counit_bad == 0, fmt("counit on %zu monomials with p <= %d", monos.size(), kRange.max_p));
        o.check(coassoc_bad == 0, fmt("coassociativity on %zu monomials with p <= %d", monos.size(), kRange.max_p));

        ExtEngine e(kRange);
        std::size_t squares = 0;
        bool sq_ok = true;
        for (const auto& [name, x] : e.name_generators()) {
            if (!kRange.contains(sq_target(x.t.s, x.t))) continue;
            ++squares;
            if (!sq(e, x.t.s, x).same_class(e.product(x, x))) {
                sq_ok = false;
                o.note("sq^s != square for " + name);
            }
        }
        o.check(sq_ok && squares > 0, fmt("sq^s(x) = x^2 on %zu named classes", squares));

        std::mt19937 rng(20240);
        std::size_t trials = 0, classes = 0;
        bool wd = true;
        for (const auto& [name, x] : e.name_generators()) {
            if (x.t.s == 0) continue;   // no boundaries to perturb by
            TriDegree lower{x.t.s - 1, x.t.p, x.t.q};
            const auto& basis = e.complex().basis(lower).terms;
            for (int i = 0; i <= x.t.s; ++i) {
                if (!kRange.contains(sq_target(i, x.t))) continue;
                ++classes;
                ExtClass base = sq(e, i, x);
                for (int trial = 0; trial < kPerturbations; ++trial) {
                    CobarElement w(lower);
                    for (const auto& term : basis)
                        if (rng() % 2) w += CobarElement::from_term(term);
                    CobarElement z = e.representative(x) + differential(w);
                    PhiMap phi;
                    ++trials;
                    if (!e.classify(phi.apply(x.t.s - i, z, z)).same_class(base)) {
                        wd = false;
                        o.note(fmt("sq^%d not well defined on ", i) + name);
                    }
                }
            }
        }
        o.check(wd && trials > 0,
                fmt("sq^i well defined: %zu (class, i) pairs x %d perturbations", classes, kPerturbations));

        dd_check(o, budget);
    });
}

Outcome oracle() {
    return guarded([](Outcome& o) {
        Range r{2, -4, 6, -4, 4};
        ExtEngine e(r);
        int n = 0, mismatches = 0;
        for (int s = 0; s <= 2; ++s)
            for (int p = r.min_p; p <= 6; ++p)
                for (int q = -4; q <= 4; ++q) {
                    ++n;
                    int a = int(e.group({s, p, q}).dim()), b = naive::ext_dim(s, p, q);
                    if (a != b) {
                        ++mismatches;
                        o.note(fmt("mismatch at %d.%d.%d: %d vs %d", s, p, q, a, b));
                    }
                }
        o.check(mismatches == 0 && n >= kMinOracleDegrees,
                fmt("%d tridegrees (s <= 2, %d <= p <= 6, |q| <= 4), %d mismatches", n, r.min_p, mismatches));
    });
}

// Independent four-case table.
Pi00Element table(int i, int j) {
    bool io = i % 2, jo = j % 2;
    if (!io && !jo) return {0, 0};
    if (!io && jo) return {1, 1};
    if (io && !jo) return {2, 0};
    return {1, -1};
}

Outcome cell_suite() {
    return guarded([](Outcome& o) {
        int bad = 0;
        for (int i = 0; i <= 63; ++i)
            for (int j = 0; j <= 63; ++j)
                if (!(attach_degree(i, j) == table(i, j))) ++bad;
        o.check(bad == 0, fmt("attach_degree table on 0 <= i,j <= 63: %d mismatches", bad));

        bad = 0;
        for (int i = 0; i <= 7; ++i)
            for (int q = 0; q <= 7; ++q) {
                Detection d = detect_pi00(attach_degree(i % 2, q % 2));
                AlphaCoefficient a = alpha(i, q);
                bool ok = a.is_zero() ? d.kind == Detection::Kind::Zero
                                      : d == Detection{Detection::Kind::Filtration1, a};
                if (!ok) ++bad;
            }
        o.check(bad == 0, fmt("alpha(i,q) = detect_pi00(attach_degree) on 64 pairs: %d mismatches", bad));

        int diagrams = 0, cells = 0;
        bad = 0;
        for (int p = 0; p <= 12; ++p)
            for (int q = 0; q <= p + 1; ++q) {
                ++diagrams;
                for (const auto& c : rp_diagram(p, q).cells) {
                    ++cells;
                    if (c.projection && hurewicz_mod2(*c.projection) != 0) ++bad;
                }
            }
        o.check(bad == 0, fmt("rp mod-2 differentials zero: %d diagrams, %d cells, p <= 12", diagrams, cells));
    });
}

Outcome rho_h0() {
    return guarded([](Outcome& o) {
        auto tau = CobarElement::from_term({Monomial::coeff(1, 0), {}});
        auto expect = CobarElement::from_term({Monomial::coeff(0, 1), {Monomial::tau(0)}});
        auto d = differential(tau);
        o.check(d == expect, "d(tau) = " + d.to_string());
        ExtEngine e(kRange);
        o.check(e.classify(expect).is_zero(), "rho[T0] classifies as zero in Ext^1.0.-1");
        auto p = e.product(*e.named("rho"), *e.named("h0"));
        o.check(p.t == TriDegree{1, 0, -1} && p.is_zero(), "rho h0 = 0");
        o.check(!e.named("h0")->is_zero() && !e.named("rho")->is_zero(), "rho != 0, h0 != 0");
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    double budget = kDefaultDdBudget;
    bool full = false;
    app.add_option("--dd-budget", budget, "seconds for the d o d sweep")->check(CLI::PositiveNumber);
    app.add_flag("--full", full, "no time limit on the d o d sweep");
    CLI11_PARSE(app, argc, argv);
    if (full) budget = 0;

    std::printf("range %s\n", kRange.to_string().c_str());
    report(1, "d2 on squares of h1, h2, h3", corollary());
    report(2, "sq0(h_n) = h_(n+1) through the Phi lift", sq0_through_phi());
    report(3, "property suite", properties(budget));
    report(4, "naive cobar oracle", oracle());
    report(5, "cell structures", cell_suite());
    report(6, "rho h0 = 0", rho_h0());
    std::printf("%d of 6 criteria failed\n", failures);
    return failures ? 1 : 0;
}
