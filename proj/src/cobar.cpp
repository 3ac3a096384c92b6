#include "motsq/cobar.hpp"

#include <algorithm>

namespace motsq {

TriDegree tridegree(const CobarTerm& t) {
    BiDegree d = t.degree();
    return {int(t.slots.size()), d.p, d.q};
}

CobarElement::CobarElement(TriDegree t, TensorElement x) : t_(t), x_(std::move(x)) {
    for (const auto& term : x_.terms()) {
        if (motsq::tridegree(term) != t_) throw std::invalid_argument("inhomogeneous cobar element: " + term.to_string());
        if (term.has_unit_slot()) throw std::invalid_argument("cobar slot must be reduced: " + term.to_string());
    }
}

CobarElement& CobarElement::operator+=(const CobarElement& o) {
    if (o.is_zero()) return *this;
    if (!is_zero() && o.t_ != t_) throw std::invalid_argument("adding cobar elements of different tridegrees");
    if (is_zero()) t_ = o.t_;
    x_ += o.x_;
    return *this;
}

namespace {

void differential_terms(const CobarTerm& t, std::vector<CobarTerm>& out) {
    if (!t.coeff.is_one()) {
        for (auto m : right_unit(t.coeff).terms()) {
            if (m == t.coeff) continue;
            CobarTerm r{m.coeff_part(), {m.pure_part()}};
            r.slots.insert(r.slots.end(), t.slots.begin(), t.slots.end());
            out.push_back(std::move(r));
        }
    }
    std::span<const Monomial> slots(t.slots);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        for (const auto& d : reduced_coproduct(slots[i]).terms()) {
            TensorElement pushed = push_left(slots.first(i), d.coeff);
            for (const auto& p : pushed.terms()) {
                CobarTerm r{combine(t.coeff, p.coeff), {}};
                r.slots.reserve(t.slots.size() + 1);
                r.slots.insert(r.slots.end(), p.slots.begin(), p.slots.end());
                r.slots.insert(r.slots.end(), d.slots.begin(), d.slots.end());
                r.slots.insert(r.slots.end(), slots.begin() + i + 1, slots.end());
                out.push_back(std::move(r));
            }
        }
    }
}

}  // namespace

TensorElement cobar_differential(const CobarTerm& t) {
    std::vector<CobarTerm> out;
    differential_terms(t, out);
    return TensorElement::from_terms(std::move(out));
}

TensorElement cobar_differential(const TensorElement& x) {
    std::vector<CobarTerm> out;
    for (const auto& t : x.terms()) differential_terms(t, out);
    return TensorElement::from_terms(std::move(out));
}

CobarElement differential(const CobarElement& x) {
    TriDegree t = x.tridegree();
    return CobarElement({t.s + 1, t.p, t.q}, cobar_differential(x.tensor()));
}

CobarElement cobar_product(const CobarElement& x, const CobarElement& y) {
    return CobarElement(x.tridegree() + y.tridegree(), concat(x.tensor(), y.tensor()));
}

namespace {

// Pure non-unit monomials usable in a slot when p - q = budget, sorted by excess.
std::vector<Monomial> slot_pool(int budget) {
    std::vector<Monomial> pool;
    if (budget <= 0) return pool;
    for (auto m : pure_monomials(2 * budget))
        if (m.excess() <= budget) pool.push_back(m);
    std::stable_sort(pool.begin(), pool.end(), [](Monomial a, Monomial b) { return a.excess() < b.excess(); });
    return pool;
}

// Returns false once fn asks to stop.
bool tuples(const std::vector<Monomial>& pool, int s, int budget, int P, TriDegree t, CobarTerm& cur,
            const std::function<bool(const CobarTerm&)>& fn) {
    if (int(cur.slots.size()) == s) {
        int b = P - t.p;
        if (b < 0) return true;
        cur.coeff = Monomial::coeff(budget, b);
        return fn(cur);
    }
    for (auto m : pool) {
        int c = m.excess();
        if (c > budget) break;
        cur.slots.push_back(m);
        bool go = tuples(pool, s, budget - c, P + m.degree().p, t, cur, fn);
        cur.slots.pop_back();
        if (!go) return false;
    }
    return true;
}

}  // namespace

bool for_each_cobar_term(TriDegree t, const std::function<bool(const CobarTerm&)>& fn) {
    int budget = t.p - t.q;
    if (t.s < 0 || budget < 0) return true;
    if (t.s == 0) {
        for (auto c : coeff_basis(t.bidegree()))
            if (!fn({Monomial::coeff(c), {}})) return false;
        return true;
    }
    auto pool = slot_pool(budget);
    CobarTerm cur;
    return tuples(pool, t.s, budget, 0, t, cur, fn);
}

std::vector<CobarTerm> enumerate_cobar_basis(TriDegree t) {
    std::vector<CobarTerm> out;
    for_each_cobar_term(t, [&](const CobarTerm& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

std::uint64_t cobar_dimension(TriDegree t) {
    int budget = t.p - t.q;
    if (t.s < 0 || budget < 0) return 0;
    if (t.s == 0) return coeff_basis(t.bidegree()).size();
    int maxP = 2 * budget;
    // counts[c][P] over the tuples built so far
    std::vector<std::vector<std::uint64_t>> one(budget + 1, std::vector<std::uint64_t>(maxP + 1, 0));
    for (auto m : slot_pool(budget)) {
        int P = m.degree().p;
        if (P <= maxP) one[m.excess()][P] += 1;
    }
    auto acc = one;
    for (int s = 1; s < t.s; ++s) {
        std::vector<std::vector<std::uint64_t>> next(budget + 1, std::vector<std::uint64_t>(maxP + 1, 0));
        for (int c1 = 0; c1 <= budget; ++c1)
            for (int P1 = 0; P1 <= maxP; ++P1) {
                if (!acc[c1][P1]) continue;
                for (int c2 = 0; c1 + c2 <= budget; ++c2)
                    for (int P2 = 0; P1 + P2 <= maxP; ++P2)
                        if (one[c2][P2]) next[c1 + c2][P1 + P2] += acc[c1][P1] * one[c2][P2];
            }
        acc = std::move(next);
    }
    std::uint64_t total = 0;
    for (int c = 0; c <= budget; ++c)
        for (int P = std::max(t.p, 0); P <= maxP; ++P) total += acc[c][P];
    return total;
}

const CobarBasis& CobarComplex::basis(TriDegree t) {
    {
        std::lock_guard lock(mu_);
        if (auto it = bases_.find(t); it != bases_.end()) return *it->second;
    }
    std::uint64_t n = cobar_dimension(t);
    if (n > max_basis_)
        throw TooLarge("cobar basis at " + t.to_string() + " has " + std::to_string(n) + " elements (limit " +
                       std::to_string(max_basis_) + ")");
    auto b = std::make_unique<CobarBasis>();
    b->t = t;
    b->terms = enumerate_cobar_basis(t);
    auto natural = [](const CobarTerm& x, const CobarTerm& y) {
        if (x.slots != y.slots) return x.slots < y.slots;
        return x.coeff < y.coeff;
    };
    std::sort(b->terms.begin(), b->terms.end(), natural);
    if (order_ == BasisOrder::Reversed) std::reverse(b->terms.begin(), b->terms.end());
    b->index.reserve(b->terms.size());
    std::uint64_t h = 1469598103934665603ULL ^ std::uint64_t(t.s * 1000003 + t.p * 1009 + t.q);
    for (std::uint32_t i = 0; i < b->terms.size(); ++i) {
        b->index.emplace(b->terms[i], i);
        h = (h ^ TensorTermHash{}(b->terms[i])) * 1099511628211ULL;
    }
    b->hash = h;
    std::lock_guard lock(mu_);
    return *bases_.emplace(t, std::move(b)).first->second;
}

f2::BitVector CobarComplex::coordinates(const CobarElement& x) {
    const CobarBasis& b = basis(x.tridegree());
    f2::BitVector v(b.size());
    for (const auto& term : x.terms()) {
        auto it = b.index.find(term);
        if (it == b.index.end()) throw std::logic_error("term outside the cobar basis: " + term.to_string());
        v.flip(it->second);
    }
    return v;
}

CobarElement CobarComplex::element(TriDegree t, const f2::BitVector& coords) {
    const CobarBasis& b = basis(t);
    if (coords.size() != b.size()) throw std::invalid_argument("coordinate length mismatch");
    std::vector<CobarTerm> terms;
    for (auto i : coords.ones()) terms.push_back(b.terms[i]);
    return CobarElement(t, TensorElement::from_terms(std::move(terms)));
}

std::vector<std::vector<std::uint32_t>> CobarComplex::differential_columns(TriDegree t) {
    const CobarBasis& src = basis(t);
    const CobarBasis& dst = basis({t.s + 1, t.p, t.q});
    std::vector<std::vector<std::uint32_t>> cols(src.size());
    const long n = long(src.size());
    bool failed = false;
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) {
        TensorElement d = cobar_differential(src.terms[std::size_t(i)]);
        auto& col = cols[std::size_t(i)];
        for (const auto& term : d.terms()) {
            auto it = dst.index.find(term);
            if (it == dst.index.end()) {
#pragma omp atomic write
                failed = true;
                continue;
            }
            col.push_back(it->second);
        }
    }
    if (failed) throw std::logic_error("differential left the cobar basis at " + t.to_string());
    return cols;
}

namespace {
constexpr double kMaxBits = 4.0e9;

void check_dense(std::size_t rows, std::size_t cols, TriDegree t) {
    if (double(rows) * double(cols) > kMaxBits)
        throw TooLarge("dense differential matrix at " + t.to_string() + " would need " + std::to_string(rows) + "x" +
                       std::to_string(cols) + " bits");
}

// checked as the echelon form grows
void check_sparse(std::size_t rank, std::size_t cols, TriDegree t) {
    if (double(rank) * double(cols) > kMaxBits)
        throw TooLarge("echelon form at " + t.to_string() + " reached " + std::to_string(rank) + "x" +
                       std::to_string(cols) + " bits");
}
}  // namespace

f2::BitMatrix CobarComplex::differential_transpose(TriDegree t) {
    std::size_t rows = basis({t.s + 1, t.p, t.q}).size(), cols = basis(t).size();
    check_dense(rows, cols, t);
    auto columns = differential_columns(t);
    f2::BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < columns.size(); ++i)
        for (auto r : columns[i]) m.flip(r, i);
    return m;
}

f2::BitMatrix CobarComplex::boundary_rows(TriDegree t) {
    TriDegree prev{t.s - 1, t.p, t.q};
    std::size_t cols = basis(t).size();
    if (t.s == 0) return f2::BitMatrix(0, cols);
    std::size_t rows = basis(prev).size();
    check_dense(rows, cols, t);
    auto columns = differential_columns(prev);
    f2::BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < columns.size(); ++i)
        for (auto c : columns[i]) m.flip(i, c);
    return m;
}

f2::Rref CobarComplex::differential_rref(TriDegree t) {
    if (!sparse(t)) return f2::rref(differential_transpose(t));
    std::size_t rows = basis({t.s + 1, t.p, t.q}).size(), cols = basis(t).size();
    std::vector<std::vector<std::uint32_t>> by_row(rows);
    {
        auto columns = differential_columns(t);
        for (std::uint32_t i = 0; i < columns.size(); ++i)
            for (auto r : columns[i]) by_row[r].push_back(i);
    }
    f2::IncrementalRref e(cols);
    for (auto& r : by_row) {
        if (!r.empty() && e.add(r)) check_sparse(e.rank(), cols, t);
        std::vector<std::uint32_t>().swap(r);
        if (e.rank() == cols) break;
    }
    return std::move(e).finish();
}

f2::Rref CobarComplex::boundary_rref(TriDegree t) {
    if (!sparse(t) || t.s == 0) return f2::rref(boundary_rows(t));
    std::size_t cols = basis(t).size();
    f2::IncrementalRref e(cols);
    for (const auto& r : differential_columns({t.s - 1, t.p, t.q}))
        if (!r.empty() && e.add(r)) check_sparse(e.rank(), cols, t);
    return std::move(e).finish();
}

}  // namespace motsq
