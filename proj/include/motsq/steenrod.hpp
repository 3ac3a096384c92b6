#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "motsq/cobar.hpp"
#include "motsq/ext.hpp"

namespace motsq {

// Image of x in cosimplicial degree n under the injection [n] -> [N] given by its vertex list f.
TensorElement coface(const TensorTerm& x, std::span<const int> f, int n_target);

// Steenrod cup-k on normalized cobar cochains; cup(0, x, y) is the cobar product.
TensorElement cup(int k, const TensorTerm& x, const TensorTerm& y);
CobarElement cup(int k, const CobarElement& x, const CobarElement& y);

// Free Z/2-resolution of F2: one generator e_k per degree, d(e_k) = (1+T) e_{k-1}.
struct SigmaTwoResolution {
    struct Chain {
        std::vector<int> plain;        // e_k with coefficient 1
        std::vector<int> translated;   // e_k T
    };
    static Chain d(int k);   // empty for k = 0
    static int augmentation(int k) { return k == 0 ? 1 : 0; }
};

struct PhiEntry {
    int k = 0;
    bool translated = false;   // value of Phi(e_k T (x) u (x) v)
    CobarTerm u, v;
    auto operator<=>(const PhiEntry&) const = default;
};

struct PhiResidual {
    PhiEntry entry;
    std::size_t chain_terms = 0;          // terms of d(Phi) - Phi(d(...))
    std::size_t equivariance_terms = 0;   // terms of Phi(e_k T u v) - Phi(e_k v u)
};

// Values of Phi(e_k (x) u (x) v) on pairs of cobar basis terms, filled on demand.
class PhiMap {
public:
    PhiMap() = default;
    PhiMap(const PhiMap& o);
    PhiMap& operator=(const PhiMap& o);

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    int max_k() const;

    const CobarElement& value(const PhiEntry& e);   // computes and stores when absent
    bool contains(const PhiEntry& e) const;
    void set(const PhiEntry& e, CobarElement value);   // no checks; used by tests and loading
    std::vector<std::pair<PhiEntry, CobarElement>> entries() const;

    // Bilinear extension: Phi(e_k (x) x (x) y).
    CobarElement apply(int k, const CobarElement& x, const CobarElement& y);

    std::string to_json() const;
    static PhiMap from_json(const std::string& text);   // throws std::runtime_error
    bool operator==(const PhiMap& o) const { return entries() == o.entries(); }

private:
    mutable std::mutex mu_;
    std::map<PhiEntry, CobarElement> values_;
};

// Fills Phi(e_k, u, v) and Phi(e_k T, u, v) for k <= max_k and every ordered pair of terms in the inputs.
PhiMap lift_phi(int max_k, std::span<const CobarElement> inputs);

// Nonzero residuals only; a correct map gives an empty report.
std::vector<PhiResidual> verify_phi(const PhiMap& phi);

// sq^i on Ext^{s,p,q}, landing in Ext^{s+i,2p,2q}. Zero when i < 0 or i > s.
ExtClass sq(ExtEngine& engine, int i, const ExtClass& x, PhiMap* phi = nullptr);
TriDegree sq_target(int i, TriDegree t);

std::filesystem::path phi_path(const std::filesystem::path& dir, int max_k);

}  // namespace motsq
