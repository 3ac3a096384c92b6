#include "motsq/diff.hpp"

#include "motsq/steenrod.hpp"

namespace motsq {

std::string AlphaCoefficient::to_string() const {
    if (h0 && rho_h1) return "(h0 + rho h1)";
    if (h0) return "h0";
    if (rho_h1) return "rho h1";
    return "0";
}

AlphaCoefficient alpha(int i, int q) {
    bool io = (i % 2 + 2) % 2 == 1, qo = (q % 2 + 2) % 2 == 1;
    if (io && qo) return {true, false};
    if (io) return {true, true};
    if (qo) return {false, true};
    return {};
}

ExtClass alpha_class(ExtEngine& engine, AlphaCoefficient a) {
    TriDegree t{1, 1, 0};
    ExtClass out = engine.zero(t);
    if (a.h0) out = engine.sum(out, *engine.named("h0"));
    if (a.rho_h1) out = engine.sum(out, engine.product(*engine.named("rho"), *engine.named("h1")));
    return out;
}

std::string Detection::to_string() const {
    switch (kind) {
        case Kind::Zero: return "0";
        case Kind::Unit: return "1 (filtration 0)";
        case Kind::Filtration1: return coeff.to_string();
        case Kind::Unknown: break;
    }
    return "unknown";
}

Detection detect_pi00(Pi00Element x) {
    using K = Detection::Kind;
    for (Pi00Element y : {x, -x}) {
        if (y == Pi00Element{0, 0}) return {K::Zero, {}};
        if (y == Pi00Element{1, 0}) return {K::Unit, {}};
        if (y == Pi00Element{2, 0}) return {K::Filtration1, {true, true}};
        if (y == Pi00Element{1, 1}) return {K::Filtration1, {false, true}};
        if (y == Pi00Element{1, -1}) return {K::Filtration1, {true, false}};
    }
    return {K::Unknown, {}};
}

namespace {

std::string square_name(ExtEngine& engine, const std::string& x, int i, TriDegree xt, const ExtClass* value) {
    if (i == xt.s) return x + "^2";
    if (value) {
        std::string d = engine.describe(*value);
        if (d == "0" || d.find('.') == std::string::npos) return d;
    }
    return "sq^" + std::to_string(i) + "(" + x + ")";
}

std::string join(const std::string& a, const std::string& b) { return a + " " + b; }

}  // namespace

DifferentialStatement d2_on_sq(ExtEngine& engine, const std::string& name, int i, const PermanenceRegistry& registry) {
    if (!registry.is_permanent(name))
        throw NonPermanent(name + " is recorded as not permanent; the d2 formula for its squares is not available");
    ExtClass x = engine.lookup(name);
    DifferentialStatement st;
    st.x = name;
    st.i = i;
    st.coeff = alpha(i, x.t.q);
    st.source_t = sq_target(i - 1, x.t);
    st.target_t = {st.source_t.s + 2, st.source_t.p + 1, st.source_t.q};
    st.assumptions.push_back(name + " is a permanent cycle");

    const Range& r = engine.range();
    std::optional<ExtClass> src;
    if (r.contains(st.source_t)) src = sq(engine, i - 1, x);
    st.source = square_name(engine, name, i - 1, x.t, src ? &*src : nullptr);

    TriDegree sq_t = sq_target(i, x.t);
    std::optional<ExtClass> y;
    if (r.contains(sq_t)) y = sq(engine, i, x);
    st.square = square_name(engine, name, i, x.t, y ? &*y : nullptr);
    if (!y || !r.contains(st.target_t)) return st;

    ExtClass total = engine.zero(st.target_t);
    if (st.coeff.h0) {
        ExtClass v = engine.product(*engine.named("h0"), *y);
        st.summands.push_back({join("h0", st.square), st.target_t, v.is_zero()});
        total = engine.sum(total, v);
    }
    if (st.coeff.rho_h1) {
        ExtClass h1 = *engine.named("h1"), rho = *engine.named("rho");
        TriDegree h1y = h1.t + y->t;
        ExtClass v = engine.zero(st.target_t);
        if (r.contains(h1y)) {
            ExtClass w = engine.product(h1, *y);
            st.facts.push_back(join("h1", st.square) + (w.is_zero() ? " = 0" : " != 0") + " in Ext^" + h1y.to_string());
            v = engine.product(rho, w);
        } else {
            v = engine.product(engine.product(rho, h1), *y);
        }
        st.summands.push_back({join("rho h1", st.square), st.target_t, v.is_zero()});
        total = engine.sum(total, v);
    }
    st.evaluated = true;
    st.value = total;
    return st;
}

std::string DifferentialStatement::to_string() const {
    std::string out = "d2(" + source + ") = ";
    if (coeff.is_zero()) {
        out += "0";
    } else {
        out += coeff.to_string() + " " + square;
        if (evaluated) {
            std::string nonzero;
            for (const auto& s : summands)
                if (!s.zero) nonzero += (nonzero.empty() ? "" : " + ") + s.expr;
            if (summands.size() > 1 && !nonzero.empty()) out += " = " + nonzero;
            out += target_zero() ? " = 0" : " != 0";
        } else {
            out += "  (not evaluated: Ext^" + target_t.to_string() + " outside range)";
        }
    }
    out += "  in Ext^" + target_t.to_string();
    for (const auto& f : facts) out += "\n  using " + f;
    for (const auto& a : assumptions) out += "\n  assuming " + a;
    return out;
}

}  // namespace motsq
