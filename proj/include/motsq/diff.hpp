#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "motsq/cells.hpp"
#include "motsq/ext.hpp"

namespace motsq {

// Element of Ext^{1,1,0} written in the basis h0, rho h1.
struct AlphaCoefficient {
    bool h0 = false;
    bool rho_h1 = false;

    bool is_zero() const { return !h0 && !rho_h1; }
    std::string to_string() const;   // "0", "h0", "rho h1", "(h0 + rho h1)"
    bool operator==(const AlphaCoefficient&) const = default;
};

AlphaCoefficient alpha(int i, int q);
ExtClass alpha_class(ExtEngine& engine, AlphaCoefficient a);

struct Detection {
    enum class Kind { Zero, Unit, Filtration1, Unknown } kind = Kind::Unknown;
    AlphaCoefficient coeff;   // for Filtration1

    std::string to_string() const;
    bool operator==(const Detection&) const = default;
};

Detection detect_pi00(Pi00Element x);

class NonPermanent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Summand {
    std::string expr;    // e.g. "h0 h3^2"
    TriDegree t;
    bool zero = false;
};

struct DifferentialStatement {
    std::string x;                  // name of the permanent cycle
    int i = 0;
    std::string source;             // name of sq^{i-1} x
    TriDegree source_t;
    AlphaCoefficient coeff;
    std::string square;             // name of sq^i x
    TriDegree target_t;
    bool evaluated = false;
    std::optional<ExtClass> value;  // evaluated target class
    std::vector<Summand> summands;
    std::vector<std::string> facts;   // auxiliary products used, e.g. "h1 h3^2 = 0"
    std::vector<std::string> assumptions;

    bool target_zero() const { return evaluated && value && value->is_zero(); }
    std::string to_string() const;
};

// Names whose d2 formula is refused because they are not permanent cycles.
struct PermanenceRegistry {
    std::set<std::string> non_permanent{"h4"};
    bool is_permanent(const std::string& name) const { return !non_permanent.count(name); }
};

// d2(sq^{i-1} x) = alpha_{i,q} sq^i(x) for x in Ext^{s,p,q}, assumed permanent.
DifferentialStatement d2_on_sq(ExtEngine& engine, const std::string& x, int i,
                               const PermanenceRegistry& registry = {});

}  // namespace motsq
