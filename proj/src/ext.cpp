#include "motsq/ext.hpp"

#include <regex>

namespace motsq {

void Range::validate() const {
    if (max_s < 0) throw std::invalid_argument("max_s must be non-negative");
    if (max_p < 0) throw std::invalid_argument("max_p must be non-negative");
    if (min_p > max_p) throw std::invalid_argument("min_p exceeds max_p");
    if (min_q > max_q) throw std::invalid_argument("min_q exceeds max_q");
}

std::string Range::to_string() const {
    return "s<=" + std::to_string(max_s) + " p=" + std::to_string(min_p) + ".." + std::to_string(max_p) +
           " q=" + std::to_string(min_q) + ".." + std::to_string(max_q);
}

ExtEngine::ExtEngine(Range range, EngineOptions options)
    : range_(range), options_(std::move(options)), complex_(options_.order, options_.max_basis, options_.sparse_threshold) {
    range_.validate();
    if (!options_.cache_dir.empty()) cache_ = std::make_unique<ExtCache>(options_.cache_dir, params());
}

std::string ExtEngine::params() const {
    return "cap=" + std::to_string(generator_cap()) + ";order=" +
           (options_.order == BasisOrder::Natural ? "natural" : "reversed") + ";algebra=1";
}

bool ExtEngine::computed(TriDegree t) {
    std::lock_guard lock(mu_);
    return groups_.count(t) > 0;
}

const ExtGroup& ExtEngine::group(TriDegree t) {
    if (!range_.contains(t)) throw OutOfRange("tridegree " + t.to_string() + " outside range " + range_.to_string());
    {
        std::lock_guard lock(mu_);
        if (auto it = groups_.find(t); it != groups_.end()) return *it->second;
    }
    auto g = compute(t);
    std::lock_guard lock(mu_);
    return *groups_.emplace(t, std::move(g)).first->second;
}

namespace {

f2::Rref complement_rref(const std::vector<f2::BitVector>& cycles, const f2::Rref& boundaries, std::size_t n) {
    std::vector<f2::BitVector> reduced;
    for (auto v : cycles) {
        f2::reduce(v, boundaries);
        if (v.any()) reduced.push_back(std::move(v));
    }
    return f2::rref(f2::BitMatrix::from_rows(reduced, n));
}

}  // namespace

std::unique_ptr<ExtGroup> ExtEngine::from_cached(TriDegree t, const CachedGroup& c, f2::Rref boundaries) {
    const CobarBasis& b = complex_.basis(t);
    std::vector<f2::BitVector> vecs;
    for (const auto& idx : c.reps) {
        f2::BitVector v(b.size());
        for (auto i : idx) v.flip(i);
        CobarElement rep = complex_.element(t, v);
        if (!differential(rep).is_zero()) return nullptr;
        vecs.push_back(std::move(v));
    }
    f2::Rref classes = complement_rref(vecs, boundaries, b.size());
    if (classes.rank() != vecs.size() || !(classes.rows == f2::BitMatrix::from_rows(vecs, b.size()))) return nullptr;
    auto g = std::make_unique<ExtGroup>();
    g->t = t;
    g->basis_size = b.size();
    g->basis_hash = b.hash;
    g->boundaries = std::move(boundaries);
    g->classes = std::move(classes);
    for (std::size_t r = 0; r < g->classes.rank(); ++r)
        g->reps.push_back(complex_.element(t, g->classes.rows.row_vector(r)));
    g->from_cache = true;
    return g;
}

std::unique_ptr<ExtGroup> ExtEngine::compute(TriDegree t) {
    const CobarBasis& b = complex_.basis(t);
    f2::Rref boundaries = complex_.boundary_rref(t);

    if (cache_) {
        if (auto c = cache_->load(t, b.hash, b.size()))
            if (auto g = from_cached(t, *c, boundaries)) return g;
    }

    std::vector<f2::BitVector> kernel;
    if (b.size()) {
        kernel = f2::null_space(complex_.differential_rref(t));
    }
    auto g = std::make_unique<ExtGroup>();
    g->t = t;
    g->basis_size = b.size();
    g->basis_hash = b.hash;
    g->classes = complement_rref(kernel, boundaries, b.size());
    g->boundaries = std::move(boundaries);
    for (std::size_t r = 0; r < g->classes.rank(); ++r)
        g->reps.push_back(complex_.element(t, g->classes.rows.row_vector(r)));

    if (cache_) {
        CachedGroup c{b.hash, b.size(), {}};
        for (std::size_t r = 0; r < g->classes.rank(); ++r) {
            std::vector<std::uint32_t> idx;
            for (auto i : g->classes.rows.row_vector(r).ones()) idx.push_back(std::uint32_t(i));
            c.reps.push_back(std::move(idx));
        }
        cache_->store(t, c);
    }
    return g;
}

ExtClass ExtEngine::zero(TriDegree t) { return {t, f2::BitVector(group(t).dim()), ""}; }

ExtClass ExtEngine::basis_class(TriDegree t, std::size_t i) {
    ExtClass x = zero(t);
    if (i >= x.coords.size()) throw std::out_of_range("class index " + std::to_string(i) + " at " + t.to_string());
    x.coords.set(i);
    return x;
}

ExtClass ExtEngine::classify(const CobarElement& cycle) {
    TriDegree t = cycle.tridegree();
    const ExtGroup& g = group(t);
    f2::BitVector v = complex_.coordinates(cycle);
    f2::reduce(v, g.boundaries);
    ExtClass x{t, f2::BitVector(g.dim()), ""};
    for (std::size_t r = 0; r < g.classes.rank(); ++r)
        if (v.get(g.classes.pivots[r])) {
            x.coords.set(r);
            const std::uint64_t* row = g.classes.rows.row(r);
            for (std::size_t k = 0; k < v.words(); ++k) v.data()[k] ^= row[k];
        }
    if (v.any()) throw NotACycle("chain at " + t.to_string() + " is not a cycle");
    return x;
}

CobarElement ExtEngine::representative(const ExtClass& x) {
    const ExtGroup& g = group(x.t);
    if (x.coords.size() != g.dim()) throw std::invalid_argument("class coordinates do not match the group");
    CobarElement out(x.t);
    for (auto i : x.coords.ones()) out += g.reps[i];
    return out;
}

ExtClass ExtEngine::sum(const ExtClass& x, const ExtClass& y) {
    if (x.t != y.t) throw std::invalid_argument("adding classes of different tridegrees");
    ExtClass out{x.t, x.coords, ""};
    out.coords ^= y.coords;
    return out;
}

ExtClass ExtEngine::product(const ExtClass& x, const ExtClass& y) {
    TriDegree t = x.t + y.t;
    if (!range_.contains(t)) throw OutOfRange("product tridegree " + t.to_string() + " outside range");
    return classify(cobar_product(representative(x), representative(y)));
}

std::optional<CobarElement> named_cycle(const std::string& name) {
    if (name == "1") return CobarElement::from_term({Monomial{}, {}});
    if (name == "rho") return CobarElement::from_term({Monomial::coeff(0, 1), {}});
    if (name == "h0") return CobarElement::from_term({Monomial{}, {Monomial::tau(0)}});
    static const std::regex hn("h([1-9][0-9]*)");
    std::smatch m;
    if (std::regex_match(name, m, hn)) {
        int n = std::stoi(m[1]);
        if (n > 6) return std::nullopt;
        return CobarElement::from_term({Monomial{}, {Monomial::xi(1, 1 << (n - 1))}});
    }
    return std::nullopt;
}

std::vector<std::string> generator_names(int max_n) {
    std::vector<std::string> out{"1", "rho"};
    for (int n = 0; n <= max_n; ++n) out.push_back("h" + std::to_string(n));
    return out;
}

std::optional<ExtClass> ExtEngine::named(const std::string& name) {
    auto cyc = named_cycle(name);
    if (!cyc || !range_.contains(cyc->tridegree())) return std::nullopt;
    ExtClass x = classify(*cyc);
    x.name = name;
    return x;
}

std::map<std::string, ExtClass> ExtEngine::name_generators() {
    std::map<std::string, ExtClass> out;
    for (const auto& n : generator_names(6))
        if (auto x = named(n); x && !x->is_zero()) out.emplace(n, *x);
    return out;
}

ExtClass ExtEngine::lookup(const std::string& key) {
    if (auto x = named(key)) return *x;
    static const std::regex k("(\\d+)\\.(-?\\d+)\\.(-?\\d+)\\.(\\d+)");
    std::smatch m;
    if (std::regex_match(key, m, k)) {
        TriDegree t{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
        ExtClass x = basis_class(t, std::stoul(m[4]));
        x.name = key;
        return x;
    }
    if (named_cycle(key)) throw OutOfRange("class " + key + " lies outside the configured range");
    throw std::invalid_argument("unknown class: " + key);
}

std::string ExtEngine::describe(const ExtClass& x) {
    if (x.is_zero()) return "0";
    for (const auto& n : generator_names(6))
        if (auto cyc = named_cycle(n); cyc && cyc->tridegree() == x.t)
            if (auto y = named(n); y && y->same_class(x)) return n;
    std::string out;
    for (auto i : x.coords.ones()) out += (out.empty() ? "" : " + ") + x.t.to_string() + "." + std::to_string(i);
    return out;
}

}  // namespace motsq
