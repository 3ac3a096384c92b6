#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "motsq/cache.hpp"
#include "motsq/cobar.hpp"
#include "motsq/f2.hpp"

namespace motsq {

// s <= max_s, min_p <= p <= max_p, min_q <= q <= max_q.
struct Range {
    int max_s = 5;
    int min_p = -2;
    int max_p = 20;
    int min_q = -2;
    int max_q = 10;

    bool contains(TriDegree t) const {
        return t.s >= 0 && t.s <= max_s && t.p >= min_p && t.p <= max_p && t.q >= min_q && t.q <= max_q;
    }
    void validate() const;
    std::string to_string() const;
    bool operator==(const Range&) const = default;
};

class OutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class NotACycle : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExtGroup {
    TriDegree t;
    std::size_t basis_size = 0;
    std::uint64_t basis_hash = 0;
    f2::Rref boundaries;              // RREF of the boundary space in C^s coordinates
    f2::Rref classes;                 // RREF of representatives, zero on boundary pivots
    std::vector<CobarElement> reps;   // one per row of classes
    bool from_cache = false;

    std::size_t dim() const { return reps.size(); }
};

struct ExtClass {
    TriDegree t;
    f2::BitVector coords;
    std::string name;

    bool is_zero() const { return !coords.any(); }
    bool same_class(const ExtClass& o) const { return t == o.t && coords == o.coords; }
};

struct EngineOptions {
    std::string cache_dir;   // empty: no persistence
    BasisOrder order = BasisOrder::Natural;
    std::uint64_t max_basis = 3'000'000;
    std::uint64_t sparse_threshold = 8192;   // columns; larger tridegrees use the sparse path
};

class ExtEngine {
public:
    explicit ExtEngine(Range range, EngineOptions options = {});

    const Range& range() const { return range_; }
    CobarComplex& complex() { return complex_; }
    ExtCache* cache() { return cache_.get(); }

    const ExtGroup& group(TriDegree t);   // throws OutOfRange
    bool computed(TriDegree t);

    ExtClass zero(TriDegree t);
    ExtClass basis_class(TriDegree t, std::size_t i);
    ExtClass classify(const CobarElement& cycle);   // throws NotACycle
    CobarElement representative(const ExtClass& x);
    ExtClass sum(const ExtClass& x, const ExtClass& y);
    ExtClass product(const ExtClass& x, const ExtClass& y);

    // "1", "rho", "h0", "h1", ... when the tridegree lies in range; nullopt otherwise.
    std::optional<ExtClass> named(const std::string& name);
    std::map<std::string, ExtClass> name_generators();
    // Parses a name or an "s.p.q.i" key.
    ExtClass lookup(const std::string& name_or_key);
    // A name when the class is a named generator, otherwise a sum of "s.p.q.i" keys.
    std::string describe(const ExtClass& x);

    std::string params() const;

private:
    std::unique_ptr<ExtGroup> compute(TriDegree t);
    std::unique_ptr<ExtGroup> from_cached(TriDegree t, const CachedGroup& c, f2::Rref boundaries);

    Range range_;
    EngineOptions options_;
    CobarComplex complex_;
    std::unique_ptr<ExtCache> cache_;
    std::mutex mu_;
    std::map<TriDegree, std::unique_ptr<ExtGroup>> groups_;
};

// Cobar cycle behind a named class: [T0] for h0, [x1^(2^(n-1))] for hn, the coefficients 1 and rho.
std::optional<CobarElement> named_cycle(const std::string& name);
std::vector<std::string> generator_names(int max_n);

}  // namespace motsq
