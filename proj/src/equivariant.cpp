#include "motsq/equivariant.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "motsq/coeff.hpp"
#include "motsq/monomial.hpp"

namespace motsq {

BiDegree EqMonomial::degree() const {
    BiDegree d{-rho, -tau - rho - alpha};
    for (int i = 1; i < 8; ++i) d += {xi[i] * xi_degree(i).p, xi[i] * xi_degree(i).q};
    for (int k = 0; k < 8; ++k) d += {tk[k] * tau_degree(k).p, tk[k] * tau_degree(k).q};
    return d;
}

std::string EqMonomial::to_string() const {
    std::string out;
    auto add = [&out](const std::string& sym, int e) {
        if (!e) return;
        out += (out.empty() ? "" : " ") + (e == 1 ? sym : sym + "^" + std::to_string(e));
    };
    add("r", rho);
    add("t", tau);
    add("a", alpha);
    for (int i = 1; i < 8; ++i) add("x" + std::to_string(i), xi[i]);
    for (int k = 0; k < 8; ++k) add("T" + std::to_string(k), tk[k]);
    return out.empty() ? "1" : out;
}

EqElement EqElement::from_terms(std::vector<EqMonomial> terms) {
    cancel_pairs(terms);
    EqElement out;
    out.terms_ = std::move(terms);
    return out;
}

std::string EqElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) out += (i ? " + " : "") + terms_[i].to_string();
    return out;
}

bool is_equivariant_normal(const EqMonomial& m) {
    for (int k = 0; k < 8; ++k)
        if (m.tk[k] > 1) return false;
    if (m.tk[0] && (m.rho || m.alpha)) return false;
    return m.alpha <= 1;
}

std::vector<EqMonomial> parse_eq_word(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<EqMonomial> out;
    while (in >> tok) {
        int e = 1;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            e = std::stoi(tok.substr(pos + 1));
            tok = tok.substr(0, pos);
        }
        EqMonomial g;
        if (tok == "t") g.tau = 1;
        else if (tok == "r") g.rho = 1;
        else if (tok == "a") g.alpha = 1;
        else if (tok.size() > 1 && tok[0] == 'x') g.xi.at(std::stoi(tok.substr(1))) = 1;
        else if (tok.size() > 1 && tok[0] == 'T') g.tk.at(std::stoi(tok.substr(1))) = 1;
        else if (!tok.empty() && tok[0] == 'Q') throw std::invalid_argument("cone coefficients are not supported");
        else throw std::invalid_argument("unknown generator: " + tok);
        for (int i = 0; i < e; ++i) out.push_back(g);
    }
    return out;
}

namespace {

enum Rule { RhoTau0, TauSquare, AlphaTau0, AlphaSquare };

struct Redex {
    Rule rule;
    int index = 0;
};

std::vector<Redex> redexes(const EqMonomial& m) {
    std::vector<Redex> out;
    if (m.rho && m.tk[0]) out.push_back({RhoTau0});
    if (m.alpha && m.tk[0]) out.push_back({AlphaTau0});
    if (m.alpha >= 2) out.push_back({AlphaSquare});
    for (int k = 0; k < 8; ++k)
        if (m.tk[k] >= 2) out.push_back({TauSquare, k});
    return out;
}

std::vector<EqMonomial> apply(const EqMonomial& m, Redex r) {
    EqMonomial base = m;
    std::vector<EqMonomial> out;
    switch (r.rule) {
        case RhoTau0: {
            base.rho -= 1; base.tk[0] -= 1;
            EqMonomial x = base, y = base;
            x.alpha += 1;
            y.tau += 1;
            out = {x, y};
            break;
        }
        case TauSquare: {
            int k = r.index;
            if (k + 1 >= 7) throw std::out_of_range("tau index exceeds generator cap");
            base.tk[k] -= 2;
            EqMonomial x = base, y = base;
            x.rho += 1; x.tk[k + 1] += 1;
            y.alpha += 1; y.xi[k + 1] += 1;
            out = {x, y};
            break;
        }
        case AlphaTau0: {
            base.alpha -= 1; base.tk[0] -= 1;
            EqMonomial x = base, y = base, z = base;
            x.tau += 1; x.tk[0] += 1;
            y.rho += 2; y.tk[1] += 1;
            z.rho += 1; z.alpha += 1; z.xi[1] += 1;
            out = {x, y, z};
            break;
        }
        case AlphaSquare: {
            base.alpha -= 2;
            EqMonomial x = base, y = base, z = base;
            x.tau += 2;
            y.rho += 3; y.tk[1] += 1;
            z.rho += 2; z.alpha += 1; z.xi[1] += 1;
            out = {x, y, z};
            break;
        }
    }
    return out;
}

void reduce_into(const EqMonomial& m, RewriteOrder order, std::mt19937* rng, std::map<EqMonomial, int>& acc) {
    auto rs = redexes(m);
    if (rs.empty()) {
        acc[m] ^= 1;
        return;
    }
    Redex r = rs.front();
    if (order == RewriteOrder::Random) r = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(*rng)];
    for (const auto& t : apply(m, r)) reduce_into(t, order, rng, acc);
}

}  // namespace

EqElement equivariant_normalize(const std::vector<EqMonomial>& word, RewriteOrder order, std::mt19937* rng) {
    if (order == RewriteOrder::Random && !rng) throw std::invalid_argument("random order needs a generator");
    std::vector<EqMonomial> current{EqMonomial{}};
    for (const auto& g : word) {
        std::map<EqMonomial, int> acc;
        for (auto m : current) {
            m.tau += g.tau; m.rho += g.rho; m.alpha += g.alpha;
            for (int i = 0; i < 8; ++i) { m.xi[i] += g.xi[i]; m.tk[i] += g.tk[i]; }
            reduce_into(m, order, rng, acc);
        }
        current.clear();
        for (const auto& [m, c] : acc)
            if (c) current.push_back(m);
    }
    return EqElement::from_terms(std::move(current));
}

EqElement equivariant_normalize(const std::string& word) { return equivariant_normalize(parse_eq_word(word)); }

}  // namespace motsq
