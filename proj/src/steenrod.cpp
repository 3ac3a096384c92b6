#include "motsq/steenrod.hpp"

#include "json.hpp"
#include <set>

namespace motsq {

TensorElement coface(const TensorTerm& x, std::span<const int> f, int n_target) {
    const std::size_t n = x.slots.size();
    if (f.size() != n + 1) throw std::invalid_argument("coface: vertex list must have arity + 1 entries");
    for (std::size_t t = 1; t <= n; ++t)
        if (f[t] <= f[t - 1]) throw std::invalid_argument("coface: vertex list must increase");
    if (f[0] < 0 || f[n] > n_target) throw std::invalid_argument("coface: vertex out of bounds");

    TensorElement body(TensorTerm{x.coeff, {}});
    for (std::size_t t = 1; t <= n; ++t) body = concat(body, iterated_coproduct(x.slots[t - 1], f[t] - f[t - 1]));
    TensorElement lead(TensorTerm{Monomial{}, std::vector<Monomial>(f[0], Monomial{})});
    TensorElement tail(TensorTerm{Monomial{}, std::vector<Monomial>(n_target - f[n], Monomial{})});
    return concat(concat(lead, body), tail);
}

namespace {

// Calls fn(U0, U1) for each cut 0 <= u_0 < ... < u_k <= N with |U0| = m+1, |U1| = n+1.
template <class Fn>
void for_each_cut(int k, int m, int n, Fn&& fn) {
    const int N = m + n - k;
    std::vector<int> u(k + 1);
    std::vector<int> U0, U1;
    auto emit = [&] {
        U0.clear();
        U1.clear();
        int lo = 0;
        for (int j = 0; j <= k + 1; ++j) {
            int hi = j <= k ? u[j] : N;
            auto& dst = j % 2 == 0 ? U0 : U1;
            for (int v = lo; v <= hi; ++v) dst.push_back(v);
            lo = hi;
        }
        if (int(U0.size()) == m + 1 && int(U1.size()) == n + 1) fn(U0, U1);
    };
    auto rec = [&](auto&& self, int j, int start) -> void {
        if (j == k + 1) return emit();
        for (int v = start; v <= N - (k - j); ++v) {
            u[j] = v;
            self(self, j + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

TensorElement cup(int k, const TensorTerm& x, const TensorTerm& y) {
    const int m = int(x.slots.size()), n = int(y.slots.size());
    if (k < 0) throw std::invalid_argument("cup: negative index");
    if (k > std::min(m, n)) return {};
    const int N = m + n - k;
    TensorElement out;
    for_each_cut(k, m, n, [&](const std::vector<int>& U0, const std::vector<int>& U1) {
        out += slot_product(coface(x, U0, N), coface(y, U1, N));
    });
    for (const auto& t : out.terms())
        if (t.has_unit_slot()) throw std::logic_error("cup product left the normalized complex: " + t.to_string());
    return out;
}

CobarElement cup(int k, const CobarElement& x, const CobarElement& y) {
    TriDegree a = x.tridegree(), b = y.tridegree();
    TriDegree t{a.s + b.s - k, a.p + b.p, a.q + b.q};
    if (k < 0 || t.s < 0) throw std::invalid_argument("cup: index out of bounds");
    TensorElement out;
    for (const auto& u : x.terms())
        for (const auto& v : y.terms()) out += cup(k, u, v);
    return CobarElement(t, std::move(out));
}

SigmaTwoResolution::Chain SigmaTwoResolution::d(int k) {
    if (k <= 0) return {};
    return {{k - 1}, {k - 1}};
}

namespace {

CobarElement compute_entry(const PhiEntry& e) {
    const CobarTerm& a = e.translated ? e.v : e.u;
    const CobarTerm& b = e.translated ? e.u : e.v;
    return cup(e.k, CobarElement::from_term(a), CobarElement::from_term(b));
}

}  // namespace

PhiMap::PhiMap(const PhiMap& o) {
    std::lock_guard lock(o.mu_);
    values_ = o.values_;
}

PhiMap& PhiMap::operator=(const PhiMap& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mu_, o.mu_);
    values_ = o.values_;
    return *this;
}

std::size_t PhiMap::size() const {
    std::lock_guard lock(mu_);
    return values_.size();
}

int PhiMap::max_k() const {
    std::lock_guard lock(mu_);
    int k = -1;
    for (const auto& [e, v] : values_) k = std::max(k, e.k);
    return k;
}

bool PhiMap::contains(const PhiEntry& e) const {
    std::lock_guard lock(mu_);
    return values_.count(e) > 0;
}

const CobarElement& PhiMap::value(const PhiEntry& e) {
    {
        std::lock_guard lock(mu_);
        if (auto it = values_.find(e); it != values_.end()) return it->second;
    }
    CobarElement v = compute_entry(e);
    std::lock_guard lock(mu_);
    return values_.emplace(e, std::move(v)).first->second;
}

void PhiMap::set(const PhiEntry& e, CobarElement value) {
    std::lock_guard lock(mu_);
    values_.insert_or_assign(e, std::move(value));
}

std::vector<std::pair<PhiEntry, CobarElement>> PhiMap::entries() const {
    std::lock_guard lock(mu_);
    return {values_.begin(), values_.end()};
}

CobarElement PhiMap::apply(int k, const CobarElement& x, const CobarElement& y) {
    TriDegree a = x.tridegree(), b = y.tridegree();
    CobarElement out({a.s + b.s - k, a.p + b.p, a.q + b.q});
    for (const auto& u : x.terms())
        for (const auto& v : y.terms()) out += value({k, false, u, v});
    return out;
}

namespace {

nlohmann::json term_json(const CobarTerm& t) {
    auto j = nlohmann::json::array({t.coeff.key()});
    for (auto m : t.slots) j.push_back(m.key());
    return j;
}

CobarTerm term_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::runtime_error("phi file: malformed term");
    CobarTerm t{Monomial::from_key(j[0].get<std::uint64_t>()), {}};
    for (std::size_t i = 1; i < j.size(); ++i) t.slots.push_back(Monomial::from_key(j[i].get<std::uint64_t>()));
    return t;
}

}  // namespace

std::string PhiMap::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [e, v] : this->entries()) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : v.terms()) terms.push_back(term_json(t));
        TriDegree t = v.tridegree();
        entries.push_back({{"k", e.k},
                           {"translated", e.translated},
                           {"u", term_json(e.u)},
                           {"v", term_json(e.v)},
                           {"tridegree", t.to_string()},
                           {"value", terms}});
    }
    nlohmann::json doc{{"format", "motsq-phi"}, {"version", 1}, {"generator_cap", generator_cap()}, {"entries", entries}};
    return doc.dump(1) + "\n";
}

PhiMap PhiMap::from_json(const std::string& text) {
    PhiMap out;
    try {
        auto doc = nlohmann::json::parse(text);
        if (doc.at("format") != "motsq-phi" || doc.at("version") != 1) throw std::runtime_error("phi file: unknown format");
        if (doc.at("generator_cap").get<int>() != generator_cap())
            throw std::runtime_error("phi file: generator cap mismatch");
        for (const auto& j : doc.at("entries")) {
            PhiEntry e{j.at("k").get<int>(), j.at("translated").get<bool>(), term_from_json(j.at("u")),
                       term_from_json(j.at("v"))};
            std::vector<CobarTerm> terms;
            for (const auto& t : j.at("value")) terms.push_back(term_from_json(t));
            TriDegree t = TriDegree::parse(j.at("tridegree").get<std::string>());
            out.set(e, CobarElement(t, TensorElement::from_terms(std::move(terms))));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("phi file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("phi file: ") + e.what());
    }
    return out;
}

PhiMap lift_phi(int max_k, std::span<const CobarElement> inputs) {
    std::set<CobarTerm> terms;
    for (const auto& x : inputs) terms.insert(x.terms().begin(), x.terms().end());
    PhiMap phi;
    for (int k = 0; k <= max_k; ++k) {
        std::vector<PhiEntry> todo;
        for (const auto& u : terms)
            for (const auto& v : terms)
                if (k <= int(std::min(u.slots.size(), v.slots.size())))
                    for (bool tr : {false, true}) todo.push_back({k, tr, u, v});
        std::vector<CobarElement> vals(todo.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < todo.size(); ++i) vals[i] = compute_entry(todo[i]);
        for (std::size_t i = 0; i < todo.size(); ++i) phi.set(todo[i], std::move(vals[i]));
    }
    return phi;
}

std::vector<PhiResidual> verify_phi(const PhiMap& phi) {
    auto all = phi.entries();
    std::map<PhiEntry, CobarElement> stored(all.begin(), all.end());
    auto get = [&](const PhiEntry& e) {
        if (auto it = stored.find(e); it != stored.end()) return it->second;
        return compute_entry(e);
    };
    std::vector<PhiResidual> out;
    for (const auto& [e, val] : all) {
        const CobarTerm& a = e.translated ? e.v : e.u;
        const CobarTerm& b = e.translated ? e.u : e.v;
        CobarElement ea = CobarElement::from_term(a), eb = CobarElement::from_term(b);
        CobarElement residual = differential(val);
        if (e.k > 0) {
            residual += get({e.k - 1, false, e.u, e.v});
            residual += get({e.k - 1, true, e.u, e.v});
        }
        CobarElement da = differential(ea), db = differential(eb);
        if (!da.is_zero()) residual += cup(e.k, da, eb);
        if (!db.is_zero()) residual += cup(e.k, ea, db);

        CobarElement twin = get({e.k, !e.translated, e.v, e.u});
        TensorElement eq = val.tensor() + twin.tensor();

        if (!residual.is_zero() || !eq.is_zero()) out.push_back({e, residual.terms().size(), eq.terms().size()});
    }
    return out;
}

TriDegree sq_target(int i, TriDegree t) { return {t.s + i, 2 * t.p, 2 * t.q}; }

ExtClass sq(ExtEngine& engine, int i, const ExtClass& x, PhiMap* phi) {
    TriDegree target = sq_target(i, x.t);
    if (i < 0 || i > x.t.s) {
        if (engine.range().contains(target)) return engine.zero(target);
        return {target, f2::BitVector(0), ""};
    }
    if (!engine.range().contains(target))
        throw OutOfRange("sq target " + target.to_string() + " outside range " + engine.range().to_string());
    CobarElement rep = engine.representative(x);
    PhiMap local;
    PhiMap& map = phi ? *phi : local;
    return engine.classify(map.apply(x.t.s - i, rep, rep));
}

std::filesystem::path phi_path(const std::filesystem::path& dir, int max_k) {
    return dir / ("phi-k" + std::to_string(max_k) + ".json");
}

}  // namespace motsq
