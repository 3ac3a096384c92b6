#include "naive.hpp"

#include <stdexcept>

namespace naive {

bool Mono::pure_one() const {
    for (int i = 0; i < 8; ++i)
        if (xi[i] || t[i]) return false;
    return true;
}

int Mono::P() const {
    int p = 0;
    for (int i = 1; i < 8; ++i) p += xi[i] * ((1 << (i + 1)) - 2);
    for (int k = 0; k < 8; ++k) p += t[k] * ((1 << (k + 1)) - 1);
    return p;
}

int Mono::Q() const {
    int q = 0;
    for (int i = 1; i < 8; ++i) q += xi[i] * ((1 << i) - 1);
    for (int k = 0; k < 8; ++k) q += t[k] * ((1 << k) - 1);
    return q;
}

void add(Elem& e, const Mono& m) {
    auto [it, inserted] = e.insert(m);
    if (!inserted) e.erase(it);
}

void add(Elem& e, const Elem& f) {
    for (const auto& m : f) add(e, m);
}

Elem reduce(const Mono& m, Strategy s, std::mt19937* rng) {
    std::vector<int> bad;
    for (int k = 0; k < 8; ++k)
        if (m.t[k] >= 2) bad.push_back(k);
    if (bad.empty()) return {m};
    int k = bad.back();
    if (s == Strategy::Random) k = bad[std::uniform_int_distribution<int>(0, int(bad.size()) - 1)(*rng)];
    if (k + 1 >= 7) throw std::out_of_range("naive: index too large");
    Mono base = m;
    base.t[k] -= 2;
    Mono r1 = base, r2 = base, r3 = base;
    r1.a += 1; r1.xi[k + 1] += 1;
    r2.b += 1; r2.t[k + 1] += 1;
    r3.b += 1; r3.t[0] += 1; r3.xi[k + 1] += 1;
    Elem out;
    for (const auto& r : {r1, r2, r3}) add(out, reduce(r, s, rng));
    return out;
}

Elem mul(const Elem& x, const Elem& y, Strategy s, std::mt19937* rng) {
    Elem out;
    for (const auto& a : x)
        for (const auto& b : y) {
            Mono m;
            m.a = a.a + b.a;
            m.b = a.b + b.b;
            for (int i = 0; i < 8; ++i) {
                m.xi[i] = a.xi[i] + b.xi[i];
                m.t[i] = a.t[i] + b.t[i];
            }
            add(out, reduce(m, s, rng));
        }
    return out;
}

Elem eta_r(int a, int b) {
    Mono one;
    one.b = b;
    Elem out{one};
    Mono t; t.a = 1;
    Mono rt0; rt0.b = 1; rt0.t[0] = 1;
    Elem base{t, rt0};
    for (int i = 0; i < a; ++i) out = mul(out, base);
    return out;
}

Mono from_motsq(motsq::Monomial m) {
    Mono r;
    r.a = m.tau_exp();
    r.b = m.rho_exp();
    for (int i = 1; i <= motsq::kMaxGeneratorIndex; ++i) r.xi[i] = m.xi_exp(i);
    for (int k = 0; k < 8; ++k) r.t[k] = m.has_tau(k) ? 1 : 0;
    return r;
}

motsq::Monomial to_motsq(const Mono& m) {
    motsq::Monomial r = motsq::Monomial::coeff(m.a, m.b);
    for (int i = 1; i < 8; ++i)
        if (m.xi[i]) r = motsq::combine(r, motsq::Monomial::xi(i, m.xi[i]));
    for (int k = 0; k < 8; ++k) {
        if (m.t[k] > 1) throw std::logic_error("to_motsq: not reduced");
        if (m.t[k]) r = motsq::combine(r, motsq::Monomial::tau(k));
    }
    return r;
}

namespace {

using Slots = std::vector<Mono>;

// Move the coefficient of the rightmost slot carrying one into its left neighbour.
void settle(Slots term, Tensor& out) {
    for (std::size_t j = term.size(); j-- > 1;) {
        if (term[j].a == 0 && term[j].b == 0) continue;
        int a = term[j].a, b = term[j].b;
        term[j].a = term[j].b = 0;
        Elem left = mul(Elem{term[j - 1]}, eta_r(a, b));
        for (const auto& m : left) {
            Slots next = term;
            next[j - 1] = m;
            settle(next, out);
        }
        return;
    }
    auto [it, inserted] = out.insert(term);
    if (!inserted) out.erase(it);
}

void expand(const std::vector<Elem>& slots, std::size_t i, Slots& cur, Tensor& out) {
    if (i == slots.size()) {
        // slot 0 holds the coefficient; fold it with slot 1's coefficient part later via settle
        Slots t = cur;
        if (t.size() > 1) {
            t[1].a += t[0].a;
            t[1].b += t[0].b;
            t[0].a = t[0].b = 0;
            Tensor tmp;
            settle(Slots(t.begin() + 1, t.end()), tmp);
            for (const auto& r : tmp) {
                Slots full{Mono{}};
                full[0].a = r[0].a;
                full[0].b = r[0].b;
                Mono first = r[0].pure();
                full.push_back(first);
                full.insert(full.end(), r.begin() + 1, r.end());
                auto [it, inserted] = out.insert(full);
                if (!inserted) out.erase(it);
            }
        } else {
            auto [it, inserted] = out.insert(t);
            if (!inserted) out.erase(it);
        }
        return;
    }
    for (const auto& m : slots[i]) {
        cur.push_back(m);
        expand(slots, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Tensor normal_form(const std::vector<Elem>& slots) {
    Tensor out;
    Slots cur;
    expand(slots, 0, cur, out);
    return out;
}

namespace {

Tensor tensor_mul(const Tensor& x, const Tensor& y) {
    Tensor out;
    for (const auto& u : x)
        for (const auto& v : y) {
            std::vector<Elem> slots;
            Mono c; c.a = u[0].a + v[0].a; c.b = u[0].b + v[0].b;
            slots.push_back({c});
            for (std::size_t i = 1; i < u.size(); ++i) slots.push_back(mul({u[i]}, {v[i]}));
            for (const auto& t : normal_form(slots)) {
                auto [it, inserted] = out.insert(t);
                if (!inserted) out.erase(it);
            }
        }
    return out;
}

Mono xi_pow(int i, int e) {
    Mono m;
    if (i) m.xi[i] = e;
    return m;
}

}  // namespace

Tensor coproduct(const Mono& pure) {
    Tensor acc{{Mono{}, Mono{}, Mono{}}};
    for (int i = 1; i < 8; ++i)
        for (int e = 0; e < pure.xi[i]; ++e) {
            Tensor g;
            for (int j = 0; j <= i; ++j) g.insert({Mono{}, xi_pow(i - j, 1 << j), xi_pow(j, 1)});
            acc = tensor_mul(acc, g);
        }
    for (int k = 0; k < 8; ++k)
        for (int e = 0; e < pure.t[k]; ++e) {
            Mono tk; tk.t[k] = 1;
            Tensor g{{Mono{}, tk, Mono{}}};
            for (int j = 0; j <= k; ++j) {
                Mono tj; tj.t[j] = 1;
                g.insert({Mono{}, xi_pow(k - j, 1 << j), tj});
            }
            acc = tensor_mul(acc, g);
        }
    return acc;
}

namespace {

std::vector<Mono> all_pure(int max_p) {
    std::vector<Mono> out;
    for (int e1 = 0; 2 * e1 <= max_p; ++e1)
        for (int e2 = 0; 2 * e1 + 6 * e2 <= max_p; ++e2)
            for (int e3 = 0; 2 * e1 + 6 * e2 + 14 * e3 <= max_p; ++e3)
                for (int mask = 0; mask < 16; ++mask) {
                    Mono m;
                    m.xi[1] = e1; m.xi[2] = e2; m.xi[3] = e3;
                    for (int k = 0; k < 4; ++k) m.t[k] = (mask >> k) & 1;
                    if (m.P() <= max_p) out.push_back(m);
                }
    return out;
}

void tuples(const std::vector<Mono>& pool, int s, int budget, Slots& cur, std::vector<Slots>& out) {
    if (int(cur.size()) == s) {
        out.push_back(cur);
        return;
    }
    for (const auto& m : pool) {
        int c = m.P() - m.Q();
        if (c > budget) continue;
        cur.push_back(m);
        tuples(pool, s, budget - c, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Mono>> cobar_basis(int s, int p, int q) {
    std::vector<Slots> out;
    int budget = p - q;
    if (budget < 0 || s < 0) return out;
    std::vector<Mono> pool = all_pure(2 * budget);
    std::vector<Slots> raw;
    Slots cur;
    tuples(pool, s, budget, cur, raw);
    for (auto& t : raw) {
        int P = 0, Q = 0;
        for (const auto& m : t) { P += m.P(); Q += m.Q(); }
        int b = P - p;
        int a = Q - b - q;
        if (a < 0 || b < 0) continue;
        Mono c; c.a = a; c.b = b;
        Slots full{c};
        full.insert(full.end(), t.begin(), t.end());
        out.push_back(full);
    }
    return out;
}

Tensor cobar_d(const std::vector<Mono>& term) {
    std::size_t s = term.size() - 1;
    Tensor out;
    auto accumulate = [&out](const Tensor& t) {
        for (const auto& x : t) {
            auto [it, inserted] = out.insert(x);
            if (!inserted) out.erase(it);
        }
    };
    const Mono& c = term[0];
    // d^0: prepend a unit slot; the coefficient crosses it via eta_R
    {
        std::vector<Elem> slots{Elem{Mono{}}, eta_r(c.a, c.b)};
        for (std::size_t i = 1; i <= s; ++i) slots.push_back({term[i]});
        accumulate(normal_form(slots));
    }
    // d^j: coproduct on slot j
    for (std::size_t j = 1; j <= s; ++j) {
        for (const auto& d : coproduct(term[j])) {
            std::vector<Elem> slots{Elem{c}};
            for (std::size_t i = 1; i < j; ++i) slots.push_back({term[i]});
            Mono left = d[1];
            left.a += d[0].a;
            left.b += d[0].b;
            slots.push_back({left});
            slots.push_back({d[2]});
            for (std::size_t i = j + 1; i <= s; ++i) slots.push_back({term[i]});
            accumulate(normal_form(slots));
        }
    }
    // d^{s+1}: append a unit slot
    {
        std::vector<Elem> slots{Elem{c}};
        for (std::size_t i = 1; i <= s; ++i) slots.push_back({term[i]});
        slots.push_back({Mono{}});
        accumulate(normal_form(slots));
    }
    return out;
}

int dense_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
    int rank = 0;
    std::size_t words = (cols + 63) / 64;
    for (std::size_t col = 0; col < cols && rank < int(rows.size()); ++col) {
        std::size_t w = col / 64;
        std::uint64_t bit = std::uint64_t(1) << (col % 64);
        std::size_t piv = rank;
        while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != std::size_t(rank) && (rows[r][w] & bit))
                for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

namespace {

int differential_rank(int s, int p, int q) {
    if (s < 0) return 0;
    auto src = cobar_basis(s, p, q);
    auto dst = cobar_basis(s + 1, p, q);
    if (src.empty() || dst.empty()) return 0;
    std::map<Slots, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
    std::size_t words = (dst.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& t : src) {
        std::vector<std::uint64_t> row(words, 0);
        for (const auto& x : cobar_d(t)) {
            auto it = index.find(x);
            if (it == index.end()) throw std::logic_error("naive: differential left the basis");
            row[it->second / 64] ^= std::uint64_t(1) << (it->second % 64);
        }
        rows.push_back(std::move(row));
    }
    return dense_rank(std::move(rows), dst.size());
}

}  // namespace

int ext_dim(int s, int p, int q) {
    int n = int(cobar_basis(s, p, q).size());
    return n - differential_rank(s, p, q) - differential_rank(s - 1, p, q);
}

}  // namespace naive
