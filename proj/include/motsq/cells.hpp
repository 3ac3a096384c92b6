#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motsq/grading.hpp"

namespace motsq {

// a + b*eps in pi_{0,0} of the real motivic sphere, eps^2 = 1.
struct Pi00Element {
    long a = 0;
    long b = 0;

    static Pi00Element one() { return {1, 0}; }
    static Pi00Element eps() { return {0, 1}; }

    friend Pi00Element operator+(Pi00Element x, Pi00Element y) { return {x.a + y.a, x.b + y.b}; }
    friend Pi00Element operator-(Pi00Element x, Pi00Element y) { return {x.a - y.a, x.b - y.b}; }
    friend Pi00Element operator-(Pi00Element x) { return {-x.a, -x.b}; }
    friend Pi00Element operator*(Pi00Element x, Pi00Element y) { return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a}; }
    bool operator==(const Pi00Element&) const = default;
    std::string to_string() const;   // "0", "1", "2", "1+e", "1-e", "3-2e", ...
};

Pi00Element pi00_mul(Pi00Element x, Pi00Element y);
// (underlying degree, fixed-point degree)
std::pair<long, long> degrees(Pi00Element x);
Pi00Element from_degrees(long du, long df);   // throws std::invalid_argument on a parity mismatch
Pi00Element attach_degree(int i, int j);
int hurewicz_mod2(Pi00Element x);

// Real projective spaces RP^{p,q}: underlying RP^p, fixed points RP^{q-1} u RP^{p-q}.
struct RPSpace {
    int dim = -1;   // -1 for the empty space
    std::string to_string() const;
    bool operator==(const RPSpace&) const = default;
};
RPSpace rp_underlying(int p, int q);
std::pair<RPSpace, RPSpace> rp_fixed(int p, int q);
std::string rp_fixed_string(int p, int q);
std::pair<int, int> rp_symmetry(int p, int q);

struct Cell {
    BiDegree dim;
    std::optional<Pi00Element> projection;     // onto the previous cell
    std::optional<std::pair<int, int>> index;  // (i, j) of the attaching map
};

struct CellDiagram {
    std::string source;
    std::vector<Cell> cells;

    std::string to_table() const;
};

// Cells (n, w_n), n = 0..p, after replacing q by p-q+1 when q > (p+1)/2.
CellDiagram rp_diagram(int p, int q);
// Cells (2p+n, 2q), n = 0..k, of the truncated extended power of S^{p,q}.
CellDiagram extended_power_diagram(int p, int q, int k);
// Rows i = 0..n-1, columns j = 0..n-1 of attach_degree.
std::string attach_table(int n);

void check_rp_params(int p, int q);

}  // namespace motsq
