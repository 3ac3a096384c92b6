#include "motsq/tensor.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace motsq {

namespace {
struct KeyPairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
};
}  // namespace

BiDegree TensorTerm::degree() const {
    BiDegree d = coeff.degree();
    for (auto m : slots) d += m.degree();
    return d;
}

bool TensorTerm::has_unit_slot() const {
    for (auto m : slots)
        if (m.is_one()) return true;
    return false;
}

std::string TensorTerm::to_string() const {
    std::string out = coeff.is_one() ? "" : coeff.to_string();
    out += "[";
    for (std::size_t i = 0; i < slots.size(); ++i) out += (i ? "|" : "") + slots[i].to_string();
    return out + "]";
}

std::size_t TensorTermHash::operator()(const TensorTerm& t) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ t.coeff.key();
    for (auto m : t.slots) h = (h ^ m.key()) * 1099511628211ULL + (h >> 29);
    return std::size_t(h);
}

TensorElement TensorElement::from_terms(std::vector<TensorTerm> terms) {
    cancel_pairs(terms);
    TensorElement out;
    out.terms_ = std::move(terms);
    return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    // both sides sorted and distinct: merge, dropping terms present on both
    std::vector<TensorTerm> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        auto c = *a <=> *b;
        if (c < 0) merged.push_back(std::move(*a++));
        else if (c > 0) merged.push_back(*b++);
        else {
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), std::make_move_iterator(a), std::make_move_iterator(terms_.end()));
    merged.insert(merged.end(), b, o.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) out += (i ? " + " : "") + terms_[i].to_string();
    return out;
}

namespace {

void push_left_into(std::span<const Monomial> slots, Monomial c, std::vector<TensorTerm>& out,
                    std::vector<Monomial>& suffix) {
    if (c.is_one() || slots.empty()) {
        TensorTerm t{c, std::vector<Monomial>(slots.begin(), slots.end())};
        t.slots.insert(t.slots.end(), suffix.rbegin(), suffix.rend());
        out.push_back(std::move(t));
        return;
    }
    for (auto m : times_right_unit(slots.back(), c).terms()) {
        suffix.push_back(m.pure_part());
        push_left_into(slots.first(slots.size() - 1), m.coeff_part(), out, suffix);
        suffix.pop_back();
    }
}

}  // namespace

TensorElement push_left(std::span<const Monomial> slots, Monomial c) {
    std::vector<TensorTerm> out;
    std::vector<Monomial> suffix;
    push_left_into(slots, c, out, suffix);
    return TensorElement::from_terms(std::move(out));
}

TensorElement concat(const TensorElement& x, const TensorElement& y) {
    std::vector<TensorTerm> out;
    for (const auto& a : x.terms())
        for (const auto& b : y.terms()) {
            TensorElement moved = push_left(a.slots, b.coeff);
            for (const auto& t : moved.terms()) {
                TensorTerm r{combine(a.coeff, t.coeff), t.slots};
                r.slots.insert(r.slots.end(), b.slots.begin(), b.slots.end());
                out.push_back(std::move(r));
            }
        }
    return TensorElement::from_terms(std::move(out));
}

TensorElement normalize_tensor(const AlgebraElement& lead, std::span<const AlgebraElement> slots) {
    std::vector<TensorTerm> init;
    for (auto c : lead.terms()) {
        if (!c.is_coeff()) throw std::invalid_argument("tensor lead must be a coefficient");
        init.push_back({c, {}});
    }
    TensorElement acc = TensorElement::from_terms(std::move(init));
    for (const auto& s : slots) {
        std::vector<TensorTerm> piece;
        for (auto m : s.terms()) piece.push_back({m.coeff_part(), {m.pure_part()}});
        acc = concat(acc, TensorElement::from_terms(std::move(piece)));
    }
    return acc;
}

TensorElement slot_product(const TensorElement& x, const TensorElement& y) {
    TensorElement out;
    std::vector<AlgebraElement> slots;
    for (const auto& a : x.terms())
        for (const auto& b : y.terms()) {
            if (a.slots.size() != b.slots.size()) throw std::invalid_argument("slot_product: arity mismatch");
            slots.clear();
            for (std::size_t i = 0; i < a.slots.size(); ++i) slots.push_back(multiply(a.slots[i], b.slots[i]));
            out += normalize_tensor(AlgebraElement(combine(a.coeff, b.coeff)), slots);
        }
    return out;
}

namespace {

TensorElement generator_coproduct(Monomial g) {
    std::vector<TensorTerm> terms;
    auto xi_pow = [](int i, int e) { return i ? Monomial::xi(i, e) : Monomial{}; };
    if (g.tau_mask()) {
        int k = std::countr_zero(g.tau_mask());
        terms.push_back({Monomial{}, {g, Monomial{}}});
        for (int i = 0; i <= k; ++i) terms.push_back({Monomial{}, {xi_pow(k - i, 1 << i), Monomial::tau(i)}});
    } else {
        int k = 1;
        while (!g.xi_exp(k)) ++k;
        for (int i = 0; i <= k; ++i) terms.push_back({Monomial{}, {xi_pow(k - i, 1 << i), xi_pow(i, 1)}});
    }
    return TensorElement::from_terms(std::move(terms));
}

// Some generator dividing the pure, non-unit monomial m.
Monomial some_generator(Monomial m) {
    for (int k = 0; k < 8; ++k)
        if (m.has_tau(k)) return Monomial::tau(k);
    for (int i = 1; i <= kMaxGeneratorIndex; ++i)
        if (m.xi_exp(i)) return Monomial::xi(i);
    throw std::logic_error("some_generator: unit");
}

}  // namespace

const TensorElement& coproduct(Monomial pure) {
    if (!pure.coeff_part().is_one()) throw std::invalid_argument("coproduct expects a pure monomial");
    thread_local std::unordered_map<std::uint64_t, TensorElement> cache;
    if (auto it = cache.find(pure.key()); it != cache.end()) return it->second;
    TensorElement out;
    if (pure.is_one()) {
        out = TensorElement(TensorTerm{Monomial{}, {Monomial{}, Monomial{}}});
    } else {
        Monomial g = some_generator(pure);
        Monomial rest = divide_generator(pure, g);
        out = rest.is_one() ? generator_coproduct(g) : slot_product(coproduct(rest), generator_coproduct(g));
    }
    return cache.emplace(pure.key(), std::move(out)).first->second;
}

const TensorElement& reduced_coproduct(Monomial pure) {
    thread_local std::unordered_map<std::uint64_t, TensorElement> cache;
    if (auto it = cache.find(pure.key()); it != cache.end()) return it->second;
    TensorElement out = coproduct(pure);
    out += TensorElement::from_terms({{Monomial{}, {pure, Monomial{}}}, {Monomial{}, {Monomial{}, pure}}});
    return cache.emplace(pure.key(), std::move(out)).first->second;
}

TensorElement coproduct(const AlgebraElement& x) {
    std::vector<TensorTerm> out;
    for (auto m : x.terms())
        for (const auto& t : coproduct(m.pure_part()).terms())
            out.push_back({combine(m.coeff_part(), t.coeff), t.slots});
    return TensorElement::from_terms(std::move(out));
}

TensorElement apply_coproduct(const TensorElement& x, std::size_t j) {
    TensorElement out;
    for (const auto& t : x.terms()) {
        if (j >= t.slots.size()) throw std::out_of_range("apply_coproduct: slot index");
        TensorElement prefix(TensorTerm{t.coeff, std::vector<Monomial>(t.slots.begin(), t.slots.begin() + j)});
        TensorElement suffix(TensorTerm{Monomial{}, std::vector<Monomial>(t.slots.begin() + j + 1, t.slots.end())});
        out += concat(concat(prefix, coproduct(t.slots[j])), suffix);
    }
    return out;
}

const TensorElement& iterated_coproduct(Monomial pure, int pieces) {
    if (pieces < 1) throw std::invalid_argument("iterated_coproduct: pieces >= 1");
    thread_local std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, TensorElement, KeyPairHash> cache;
    auto key = std::make_pair(pure.key(), std::uint64_t(pieces));
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    TensorElement out;
    if (pieces == 1) {
        out = TensorElement(TensorTerm{Monomial{}, {pure}});
    } else {
        std::vector<TensorTerm> terms;
        for (const auto& t : iterated_coproduct(pure, pieces - 1).terms())
            for (const auto& d : coproduct(t.slots.front()).terms()) {
                TensorTerm r{combine(t.coeff, d.coeff), d.slots};
                r.slots.insert(r.slots.end(), t.slots.begin() + 1, t.slots.end());
                terms.push_back(std::move(r));
            }
        out = TensorElement::from_terms(std::move(terms));
    }
    return cache.emplace(key, std::move(out)).first->second;
}

AlgebraElement counit_left(const TensorElement& x) {
    std::vector<Monomial> out;
    for (const auto& t : x.terms()) {
        if (t.slots.size() != 2) throw std::invalid_argument("counit_left: arity 2 expected");
        if (t.slots[0].is_one()) out.push_back(combine(t.coeff, t.slots[1]));
    }
    return AlgebraElement::from_terms(std::move(out));
}

AlgebraElement counit_right(const TensorElement& x) {
    std::vector<Monomial> out;
    for (const auto& t : x.terms()) {
        if (t.slots.size() != 2) throw std::invalid_argument("counit_right: arity 2 expected");
        if (t.slots[1].is_one()) out.push_back(combine(t.coeff, t.slots[0]));
    }
    return AlgebraElement::from_terms(std::move(out));
}

}  // namespace motsq
