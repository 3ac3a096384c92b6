#include "motsq/algebra.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace motsq {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
};

// tau_k^2 = tau xi_{k+1} + rho tau_{k+1} + rho tau_0 xi_{k+1}
AlgebraElement tau_square(int k) {
    Monomial t = Monomial::coeff(1, 0), r = Monomial::coeff(0, 1);
    Monomial x = Monomial::xi(k + 1);
    return AlgebraElement::from_terms({combine(t, x), combine(r, Monomial::tau(k + 1)),
                                       combine(combine(r, Monomial::tau(0)), x)});
}

}  // namespace

AlgebraElement AlgebraElement::from_terms(std::vector<Monomial> terms) {
    cancel_pairs(terms);
    AlgebraElement out;
    out.terms_ = std::move(terms);
    return out;
}

AlgebraElement AlgebraElement::from_coeff(const MotivicCoeff& c) {
    std::vector<Monomial> terms;
    for (const auto& m : c.terms()) terms.push_back(Monomial::coeff(m));
    return from_terms(std::move(terms));
}

BiDegree AlgebraElement::bidegree() const {
    if (terms_.empty()) throw std::invalid_argument("zero element has no bidegree");
    BiDegree d = terms_.front().degree();
    for (auto m : terms_)
        if (m.degree() != d) throw std::invalid_argument("inhomogeneous element");
    return d;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    cancel_pairs(terms_);
    return *this;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    std::vector<Monomial> out;
    for (auto a : x.terms_)
        for (auto b : y.terms_) {
            const auto& p = multiply(a, b);
            out.insert(out.end(), p.terms().begin(), p.terms().end());
        }
    return AlgebraElement::from_terms(std::move(out));
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) out += (i ? " + " : "") + terms_[i].to_string();
    return out;
}

const AlgebraElement& multiply(Monomial x, Monomial y) {
    if (y < x) std::swap(x, y);
    thread_local std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, AlgebraElement, PairHash> cache;
    auto key = std::make_pair(x.key(), y.key());
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    AlgebraElement result;
    unsigned overlap = x.tau_mask() & y.tau_mask();
    if (!overlap) {
        result = AlgebraElement(combine(x, y));
    } else {
        int k = std::countr_zero(overlap);
        AlgebraElement base = multiply(x.without_tau(k), y.without_tau(k));
        AlgebraElement rel = tau_square(k);
        std::vector<Monomial> terms;
        for (auto b : base.terms())
            for (auto r : rel.terms()) {
                const auto& p = multiply(b, r);
                terms.insert(terms.end(), p.terms().begin(), p.terms().end());
            }
        result = AlgebraElement::from_terms(std::move(terms));
    }
    return cache.emplace(key, std::move(result)).first->second;
}

Word parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    Word w;
    while (in >> tok) {
        int e = 1;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            e = std::stoi(tok.substr(pos + 1));
            tok = tok.substr(0, pos);
        }
        Generator g{Generator::Kind::Tau, 0};
        if (tok == "t") g = {Generator::Kind::Tau, 0};
        else if (tok == "r") g = {Generator::Kind::Rho, 0};
        else if (tok.size() > 1 && tok[0] == 'x') g = {Generator::Kind::Xi, std::stoi(tok.substr(1))};
        else if (tok.size() > 1 && tok[0] == 'T') g = {Generator::Kind::TauK, std::stoi(tok.substr(1))};
        else throw std::invalid_argument("unknown generator: " + tok);
        for (int i = 0; i < e; ++i) w.push_back(g);
    }
    return w;
}

AlgebraElement normalize(const Word& word) {
    AlgebraElement acc(Monomial{});
    for (const auto& g : word) {
        Monomial m;
        switch (g.kind) {
            case Generator::Kind::Tau: m = Monomial::coeff(1, 0); break;
            case Generator::Kind::Rho: m = Monomial::coeff(0, 1); break;
            case Generator::Kind::Xi: m = Monomial::xi(g.index); break;
            case Generator::Kind::TauK: m = Monomial::tau(g.index); break;
        }
        acc = acc * AlgebraElement(m);
    }
    return acc;
}

BiDegree monomial_bidegree(Monomial m) { return m.degree(); }

const AlgebraElement& right_unit(Monomial coeff) {
    if (!coeff.is_coeff()) throw std::invalid_argument("right_unit expects a coefficient monomial");
    thread_local std::unordered_map<std::uint64_t, AlgebraElement> cache;
    thread_local std::vector<AlgebraElement> tau_powers{AlgebraElement(Monomial{})};
    if (auto it = cache.find(coeff.key()); it != cache.end()) return it->second;

    int a = coeff.tau_exp();
    if (int(tau_powers.size()) <= a) {
        AlgebraElement eta_tau = AlgebraElement::from_terms(
            {Monomial::coeff(1, 0), combine(Monomial::coeff(0, 1), Monomial::tau(0))});
        while (int(tau_powers.size()) <= a) tau_powers.push_back(tau_powers.back() * eta_tau);
    }
    Monomial rho_b = Monomial::coeff(0, coeff.rho_exp());
    std::vector<Monomial> terms;
    for (auto m : tau_powers[a].terms()) terms.push_back(combine(m, rho_b));
    return cache.emplace(coeff.key(), AlgebraElement::from_terms(std::move(terms))).first->second;
}

AlgebraElement right_unit(const MotivicCoeff& c) {
    AlgebraElement out;
    for (const auto& m : c.terms()) out += right_unit(Monomial::coeff(m));
    return out;
}

const AlgebraElement& times_right_unit(Monomial m, Monomial c) {
    thread_local std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, AlgebraElement, PairHash> cache;
    auto key = std::make_pair(m.key(), c.key());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    AlgebraElement out = AlgebraElement(m) * right_unit(c);
    return cache.emplace(key, std::move(out)).first->second;
}

namespace {

void enumerate_pure(int max_p, int gen, int p, Monomial cur, std::vector<Monomial>& out) {
    int cap = generator_cap();
    // generators in order: xi_1..xi_cap, then tau_0..tau_cap
    if (gen == 2 * cap + 1) {
        if (!cur.is_one()) out.push_back(cur);
        return;
    }
    if (gen < cap) {
        int i = gen + 1;
        int step = xi_degree(i).p;
        Monomial m = cur;
        for (int e = 0; p + e * step <= max_p; ++e) {
            enumerate_pure(max_p, gen + 1, p + e * step, m, out);
            if (e + 1 > 0x3f) break;
            m = combine(m, Monomial::xi(i));
        }
    } else {
        int k = gen - cap;
        enumerate_pure(max_p, gen + 1, p, cur, out);
        int step = tau_degree(k).p;
        if (p + step <= max_p) enumerate_pure(max_p, gen + 1, p + step, combine(cur, Monomial::tau(k)), out);
    }
}

}  // namespace

const std::vector<Monomial>& pure_monomials(int max_p) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Monomial>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(max_p, generator_cap());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<Monomial> out;
    if (max_p > 0) enumerate_pure(max_p, 0, 0, Monomial{}, out);
    std::sort(out.begin(), out.end());
    return cache.emplace(key, std::move(out)).first->second;
}

std::vector<Monomial> basis(BiDegree d, bool reduced) {
    std::vector<Monomial> out;
    int budget = d.p - d.q;   // sum of excesses plus the tau exponent
    if (budget < 0) return out;
    if (!reduced)
        for (auto c : coeff_basis(d)) out.push_back(Monomial::coeff(c));
    for (auto m : pure_monomials(2 * budget)) {
        BiDegree md = m.degree();
        int b = md.p - d.p;
        int a = budget - (md.p - md.q);
        if (b < 0 || a < 0) continue;
        out.push_back(combine(Monomial::coeff(a, b), m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace motsq
