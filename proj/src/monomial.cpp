#include "motsq/monomial.hpp"

#include <atomic>
#include <stdexcept>

namespace motsq {

namespace {
std::atomic<int> g_cap{kMaxGeneratorIndex};

constexpr std::uint64_t kXiMask = 0x3f;
}  // namespace

int generator_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_generator_cap(int cap) {
    if (cap < 1 || cap > kMaxGeneratorIndex)
        throw std::out_of_range("generator cap must lie in [1, " + std::to_string(kMaxGeneratorIndex) + "]");
    g_cap.store(cap, std::memory_order_relaxed);
}

BiDegree xi_degree(int i) { return {(1 << (i + 1)) - 2, (1 << i) - 1}; }
BiDegree tau_degree(int k) { return {(1 << (k + 1)) - 1, (1 << k) - 1}; }

Monomial Monomial::coeff(int a, int b) {
    if (a < 0 || b < 0 || a > 0xff || b > 0xff) throw std::overflow_error("coefficient exponent out of range");
    return from_key(std::uint64_t(a) | (std::uint64_t(b) << 8));
}

Monomial Monomial::xi(int i, int e) {
    if (i < 1 || i > generator_cap()) throw std::out_of_range("xi index exceeds generator cap");
    if (e < 0 || e > int(kXiMask)) throw std::overflow_error("xi exponent out of range");
    return from_key(std::uint64_t(e) << (24 + 6 * (i - 1)));
}

Monomial Monomial::tau(int k) {
    if (k < 0 || k > generator_cap()) throw std::out_of_range("tau index exceeds generator cap");
    return from_key(std::uint64_t(1) << (16 + k));
}

BiDegree Monomial::degree() const {
    BiDegree d = CoeffMonomial{tau_exp(), rho_exp()}.bidegree();
    for (int i = 1; i <= kMaxGeneratorIndex; ++i) {
        int e = xi_exp(i);
        if (e) {
            BiDegree x = xi_degree(i);
            d += {e * x.p, e * x.q};
        }
    }
    for (int k = 0; k < 8; ++k)
        if (has_tau(k)) d += tau_degree(k);
    return d;
}

Monomial combine(Monomial x, Monomial y) {
    if (x.tau_mask() & y.tau_mask()) throw std::logic_error("combine: overlapping tau generators");
    int a = x.tau_exp() + y.tau_exp();
    int b = x.rho_exp() + y.rho_exp();
    if (a > 0xff || b > 0xff) throw std::overflow_error("coefficient exponent overflow");
    std::uint64_t key = std::uint64_t(a) | (std::uint64_t(b) << 8) |
                        (std::uint64_t(x.tau_mask() | y.tau_mask()) << 16);
    for (int i = 1; i <= kMaxGeneratorIndex; ++i) {
        int e = x.xi_exp(i) + y.xi_exp(i);
        if (e > int(kXiMask)) throw std::overflow_error("xi exponent overflow");
        key |= std::uint64_t(e) << (24 + 6 * (i - 1));
    }
    return Monomial::from_key(key);
}

Monomial divide_generator(Monomial m, Monomial gen) {
    std::uint64_t key = m.key() - gen.key();
    Monomial out = Monomial::from_key(key);
    if (combine(out, gen) != m) throw std::logic_error("divide_generator: not a divisor");
    return out;
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::string out;
    auto add = [&out](const std::string& s) { out += (out.empty() ? "" : " ") + s; };
    auto pw = [](const std::string& sym, int e) { return e == 1 ? sym : sym + "^" + std::to_string(e); };
    if (rho_exp()) add(pw("r", rho_exp()));
    if (tau_exp()) add(pw("t", tau_exp()));
    for (int i = 1; i <= kMaxGeneratorIndex; ++i)
        if (xi_exp(i)) add(pw("x" + std::to_string(i), xi_exp(i)));
    for (int k = 0; k < 8; ++k)
        if (has_tau(k)) add("T" + std::to_string(k));
    return out;
}

}  // namespace motsq
