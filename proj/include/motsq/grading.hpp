#pragma once

#include <compare>
#include <string>

namespace motsq {

struct BiDegree {
    int p = 0;
    int q = 0;

    BiDegree operator+(BiDegree o) const { return {p + o.p, q + o.q}; }
    BiDegree operator-(BiDegree o) const { return {p - o.p, q - o.q}; }
    BiDegree& operator+=(BiDegree o) { p += o.p; q += o.q; return *this; }
    auto operator<=>(const BiDegree&) const = default;

    std::string to_string() const;
};

// (s, p, q): Adams filtration, topological degree, weight.
struct TriDegree {
    int s = 0;
    int p = 0;
    int q = 0;

    BiDegree bidegree() const { return {p, q}; }
    TriDegree operator+(TriDegree o) const { return {s + o.s, p + o.p, q + o.q}; }
    auto operator<=>(const TriDegree&) const = default;

    std::string to_string() const;   // "s.p.q"
    static TriDegree parse(const std::string& text);
};

}  // namespace motsq
