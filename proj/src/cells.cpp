#include "motsq/cells.hpp"

#include <sstream>
#include <stdexcept>

namespace motsq {

std::string Pi00Element::to_string() const {
    if (b == 0) return std::to_string(a);
    std::string e = (b == 1 || b == -1) ? "e" : std::to_string(b < 0 ? -b : b) + "e";
    if (a == 0) return (b < 0 ? "-" : "") + e;
    return std::to_string(a) + (b < 0 ? "-" : "+") + e;
}

Pi00Element pi00_mul(Pi00Element x, Pi00Element y) { return x * y; }

std::pair<long, long> degrees(Pi00Element x) { return {x.a - x.b, x.a + x.b}; }

Pi00Element from_degrees(long du, long df) {
    if ((du - df) % 2 != 0)
        throw std::invalid_argument("degrees (" + std::to_string(du) + "," + std::to_string(df) + ") differ in parity");
    return {(du + df) / 2, (df - du) / 2};
}

Pi00Element attach_degree(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("attach_degree: indices must be non-negative");
    auto sign = [](int n) { return n % 2 == 0 ? 1 : -1; };
    return from_degrees(1 - sign(i), 1 - sign(i + j));
}

int hurewicz_mod2(Pi00Element x) { return int(((x.a + x.b) % 2 + 2) % 2); }

std::string RPSpace::to_string() const { return dim < 0 ? "∅" : "RP^" + std::to_string(dim); }

void check_rp_params(int p, int q) {
    if (p < 0 || q < 0 || q > p + 1)
        throw std::invalid_argument("RP^{p,q} needs 0 <= q <= p+1, got p=" + std::to_string(p) + " q=" + std::to_string(q));
}

RPSpace rp_underlying(int p, int q) {
    check_rp_params(p, q);
    return {p};
}

std::pair<RPSpace, RPSpace> rp_fixed(int p, int q) {
    check_rp_params(p, q);
    return {{q - 1}, {p - q}};
}

std::string rp_fixed_string(int p, int q) {
    auto [a, b] = rp_fixed(p, q);
    return a.to_string() + " ⊔ " + b.to_string();
}

std::pair<int, int> rp_symmetry(int p, int q) {
    check_rp_params(p, q);
    return {p, p - q + 1};
}

CellDiagram rp_diagram(int p, int q) {
    check_rp_params(p, q);
    int w = 2 * q > p + 1 ? p - q + 1 : q;
    CellDiagram d{"RP^{" + std::to_string(p) + "," + std::to_string(q) + "}", {}};
    for (int n = 0; n <= p; ++n) {
        int wn = std::min((n + 1) / 2, w);
        Cell c{{n, wn}, std::nullopt, std::nullopt};
        if (n > 0) {
            c.projection = attach_degree(n - 1, wn);
            c.index = std::make_pair(n - 1, wn);
        }
        d.cells.push_back(c);
    }
    return d;
}

CellDiagram extended_power_diagram(int p, int q, int k) {
    if (k < 0) throw std::invalid_argument("extended_power_diagram: k must be non-negative");
    if (p < 0 || q < 0) throw std::invalid_argument("extended_power_diagram: p and q must be non-negative");
    CellDiagram d{"D2(S^{" + std::to_string(p) + "," + std::to_string(q) + "}) to cell " + std::to_string(2 * p + k), {}};
    for (int n = 0; n <= k; ++n) {
        Cell c{{2 * p + n, 2 * q}, std::nullopt, std::nullopt};
        if (n > 0) {
            c.projection = attach_degree(p + n - 1, q);
            c.index = std::make_pair(p + n - 1, q);
        }
        d.cells.push_back(c);
    }
    return d;
}

std::string CellDiagram::to_table() const {
    std::ostringstream out;
    out << source << "\n";
    out << "cell      attach    projection  mod2\n";
    for (const auto& c : cells) {
        std::string dim = c.dim.to_string();
        std::string idx = c.index ? "(" + std::to_string(c.index->first) + "," + std::to_string(c.index->second) + ")" : "-";
        std::string proj = c.projection ? c.projection->to_string() : "-";
        std::string mod2 = c.projection ? std::to_string(hurewicz_mod2(*c.projection)) : "-";
        out << dim << std::string(dim.size() < 10 ? 10 - dim.size() : 1, ' ') << idx
            << std::string(idx.size() < 10 ? 10 - idx.size() : 1, ' ') << proj
            << std::string(proj.size() < 12 ? 12 - proj.size() : 1, ' ') << mod2 << "\n";
    }
    return out.str();
}

std::string attach_table(int n) {
    if (n < 1) throw std::invalid_argument("attach table size must be positive");
    std::ostringstream out;
    out << "i\\j";
    for (int j = 0; j < n; ++j) out << "\t" << j;
    out << "\n";
    for (int i = 0; i < n; ++i) {
        out << i;
        for (int j = 0; j < n; ++j) out << "\t" << attach_degree(i, j).to_string();
        out << "\n";
    }
    return out.str();
}

}  // namespace motsq
