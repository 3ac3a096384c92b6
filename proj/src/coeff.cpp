#include "motsq/coeff.hpp"

namespace motsq {

namespace {

std::string power(const char* sym, int e) {
    if (e == 1) return sym;
    return std::string(sym) + "^" + std::to_string(e);
}

template <class T>
std::string join_terms(const std::vector<T>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += terms[i].to_string();
    }
    return out;
}

}  // namespace

std::string CoeffMonomial::to_string() const {
    if (a == 0 && b == 0) return "1";
    std::string out;
    if (a) out += power("t", a);
    if (b) out += (out.empty() ? "" : " ") + power("r", b);
    return out;
}

MotivicCoeff MotivicCoeff::from_terms(std::vector<CoeffMonomial> terms) {
    for (const auto& m : terms)
        if (m.a < 0 || m.b < 0) throw std::invalid_argument("negative coefficient exponent");
    cancel_pairs(terms);
    MotivicCoeff out;
    out.terms_ = std::move(terms);
    return out;
}

BiDegree MotivicCoeff::bidegree() const {
    if (terms_.empty()) throw std::invalid_argument("zero coefficient has no bidegree");
    BiDegree d = terms_.front().bidegree();
    for (const auto& m : terms_)
        if (m.bidegree() != d) throw std::invalid_argument("inhomogeneous coefficient");
    return d;
}

MotivicCoeff& MotivicCoeff::operator+=(const MotivicCoeff& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    cancel_pairs(terms_);
    return *this;
}

MotivicCoeff operator*(const MotivicCoeff& x, const MotivicCoeff& y) {
    std::vector<CoeffMonomial> out;
    out.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& a : x.terms_)
        for (const auto& b : y.terms_) out.push_back(a * b);
    return MotivicCoeff::from_terms(std::move(out));
}

std::string MotivicCoeff::to_string() const { return join_terms(terms_); }

std::string ConeSymbol::to_string() const {
    CoeffMonomial d{i, j};
    if (i == 0 && j == 0) return "Q";
    return "Q/(" + d.to_string() + ")";
}

EquivariantCoeff EquivariantCoeff::cone(ConeSymbol c) {
    if (c.i < 0 || c.j < 0) throw std::invalid_argument("negative cone exponent");
    EquivariantCoeff out;
    out.cone_.push_back(c);
    return out;
}

BiDegree EquivariantCoeff::bidegree(BiDegree theta_degree) const {
    std::vector<BiDegree> degs;
    for (const auto& m : positive_.terms()) degs.push_back(m.bidegree());
    // |theta| - i|tau| - j|rho|
    for (const auto& c : cone_) degs.push_back({theta_degree.p + c.j, theta_degree.q + c.i + c.j});
    if (degs.empty()) throw std::invalid_argument("zero coefficient has no bidegree");
    for (const auto& d : degs)
        if (d != degs.front()) throw std::invalid_argument("inhomogeneous coefficient");
    return degs.front();
}

EquivariantCoeff& EquivariantCoeff::operator+=(const EquivariantCoeff& o) {
    positive_ += o.positive_;
    cone_.insert(cone_.end(), o.cone_.begin(), o.cone_.end());
    cancel_pairs(cone_);
    return *this;
}

EquivariantCoeff operator*(const EquivariantCoeff& x, const EquivariantCoeff& y) {
    EquivariantCoeff out(x.positive_ * y.positive_);
    auto act = [&out](const MotivicCoeff& pos, const std::vector<ConeSymbol>& cone) {
        for (const auto& m : pos.terms())
            for (const auto& c : cone)
                if (m.a <= c.i && m.b <= c.j) out.cone_.push_back({c.i - m.a, c.j - m.b});
    };
    act(x.positive_, y.cone_);
    act(y.positive_, x.cone_);
    cancel_pairs(out.cone_);
    return out;
}

std::string EquivariantCoeff::to_string() const {
    if (is_zero()) return "0";
    std::string out = positive_.is_zero() ? "" : positive_.to_string();
    for (const auto& c : cone_) out += (out.empty() ? "" : " + ") + c.to_string();
    return out;
}

AnyCoeff coeff_mul(const AnyCoeff& x, const AnyCoeff& y) {
    if (x.index() != y.index()) throw std::invalid_argument("coefficients from different rings");
    if (auto* mx = std::get_if<MotivicCoeff>(&x)) return *mx * std::get<MotivicCoeff>(y);
    return std::get<EquivariantCoeff>(x) * std::get<EquivariantCoeff>(y);
}

BiDegree coeff_bidegree(const AnyCoeff& x) {
    return std::visit([](const auto& c) { return c.bidegree(); }, x);
}

std::vector<CoeffMonomial> coeff_basis(BiDegree d) {
    int b = -d.p;
    int a = d.p - d.q;
    if (a < 0 || b < 0) return {};
    return {CoeffMonomial{a, b}};
}

}  // namespace motsq
