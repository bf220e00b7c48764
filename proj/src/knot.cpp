#include "dehn/knot.hpp"

#include <algorithm>
#include <sstream>

namespace dehn {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

namespace {

using Code = ValidationError::Code;

[[noreturn]] void fail(Code c, const std::string& msg) {
    throw ValidationError(c, std::string(to_string(c)) + ": " + msg);
}

KnotPtr make(KnotExpr e) { return std::make_shared<const KnotExpr>(std::move(e)); }

}  // namespace

KnotPtr KnotExpr::unknot() {
    return make(KnotExpr{});
}

KnotPtr KnotExpr::torus(Int m, Int n) {
    KnotExpr e;
    e.kind = Kind::Torus;
    e.m = std::move(m);
    e.n = std::move(n);
    return make(std::move(e));
}

KnotPtr KnotExpr::hyp_atom(HypAttrs attrs, std::string name) {
    KnotExpr e;
    e.kind = Kind::Hyp;
    e.hyp = std::move(attrs);
    e.name = std::move(name);
    return make(std::move(e));
}

KnotPtr KnotExpr::cable(Int m, Int n, KnotPtr companion) {
    KnotExpr e;
    e.kind = Kind::Cable;
    e.m = std::move(m);
    e.n = std::move(n);
    e.companion = std::move(companion);
    return make(std::move(e));
}

KnotPtr KnotExpr::satellite(PatternAttrs pattern, KnotPtr companion) {
    KnotExpr e;
    e.kind = Kind::Satellite;
    e.pattern = std::move(pattern);
    e.companion = std::move(companion);
    return make(std::move(e));
}

KnotPtr KnotExpr::sum(std::vector<KnotPtr> summands) {
    KnotExpr e;
    e.kind = Kind::Sum;
    e.summands = std::move(summands);
    return make(std::move(e));
}

// ---------------------------------------------------------------- printing

namespace {

std::string delta_str(const DegeneracyLocus& d) {
    std::string s = d.b.str() + "mu";
    if (d.form == DegeneracyLocus::Form::BMuPlusLambda) s += "+lambda";
    return s;
}

std::string slope_set_str(const std::vector<Slope>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + "}";
}

void append_attr(std::vector<std::string>& out, const char* key, const std::string& val) {
    out.push_back(std::string(key) + "=" + val);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::vector<std::string> hyp_attr_list(const KnotExpr& e) {
    std::vector<std::string> a;
    if (!e.name.empty()) append_attr(a, "name", e.name);
    const HypAttrs& h = e.hyp;
    if (h.genus) append_attr(a, "genus", h.genus->str());
    if (h.fibred) append_attr(a, "fibred", bool_str(*h.fibred));
    switch (h.fdtc) {
        case FdtcSign::Positive: append_attr(a, "fdtc", "+"); break;
        case FdtcSign::Negative: append_attr(a, "fdtc", "-"); break;
        case FdtcSign::Zero: append_attr(a, "fdtc", "0"); break;
        case FdtcSign::Unknown: break;
    }
    if (h.l_space_knot == LSpaceKnotSign::Positive) append_attr(a, "plsk", "+");
    if (h.l_space_knot == LSpaceKnotSign::Negative) append_attr(a, "plsk", "-");
    if (h.alternating) append_attr(a, "alt", bool_str(*h.alternating));
    if (h.persistently_foliar) append_attr(a, "pf", bool_str(*h.persistently_foliar));
    if (h.degeneracy_locus) append_attr(a, "delta", delta_str(*h.degeneracy_locus));
    if (h.non_lo_branched_cover) append_attr(a, "nlobc", bool_str(*h.non_lo_branched_cover));
    if (!h.known_lo_slopes.empty()) append_attr(a, "lo", slope_set_str(h.known_lo_slopes));
    if (!h.known_not_lo_slopes.empty()) append_attr(a, "nlo", slope_set_str(h.known_not_lo_slopes));
    return a;
}

std::vector<std::string> pattern_attr_list(const PatternAttrs& p) {
    std::vector<std::string> a;
    append_attr(a, "w", p.winding.str());
    if (p.braided) append_attr(a, "braided", bool_str(*p.braided));
    if (p.one_bridge_braid) {
        const ObbTriple& o = *p.one_bridge_braid;
        append_attr(a, "obb", "(" + o.w.str() + "," + o.b.str() + "," + o.t.str() + ")");
    }
    if (p.solid_torus_surgery) append_attr(a, "sts", bool_str(*p.solid_torus_surgery));
    if (p.cabled) append_attr(a, "cabled", bool_str(*p.cabled));
    if (p.exterior_atoroidal) append_attr(a, "atoroidal", bool_str(*p.exterior_atoroidal));
    if (p.pattern_closure) append_attr(a, "closure", to_dsl(p.pattern_closure));
    if (p.closure_genus) append_attr(a, "cgenus", p.closure_genus->str());
    return a;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i];
    }
    return s;
}

}  // namespace

std::string to_dsl(const KnotPtr& expr) {
    const KnotExpr& e = *expr;
    switch (e.kind) {
        case KnotExpr::Kind::Unknot:
            return "U";
        case KnotExpr::Kind::Torus:
            return "T(" + e.m.str() + "," + e.n.str() + ")";
        case KnotExpr::Kind::Hyp:
            return "Hyp(" + join(hyp_attr_list(e)) + ")";
        case KnotExpr::Kind::Cable:
            return "C(" + e.m.str() + "," + e.n.str() + "; " + to_dsl(e.companion) + ")";
        case KnotExpr::Kind::Satellite:
            return "Sat(" + join(pattern_attr_list(e.pattern)) + "; " + to_dsl(e.companion) + ")";
        case KnotExpr::Kind::Sum: {
            std::string s = "Sum(";
            for (size_t i = 0; i < e.summands.size(); ++i) {
                if (i) s += ", ";
                s += to_dsl(e.summands[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

bool equal(const KnotPtr& a, const KnotPtr& b) {
    return to_dsl(a) == to_dsl(b);
}

// -------------------------------------------------------------- validation

namespace {

HypAttrs validate_hyp_attrs(HypAttrs h) {
    if (h.genus && *h.genus < 1) fail(Code::InconsistentAttrs, "atom genus must be >= 1");
    if (h.degeneracy_locus && h.degeneracy_locus->b == 0)
        fail(Code::InconsistentAttrs, "degeneracy locus requires b != 0");
    if (h.l_space_knot == LSpaceKnotSign::Positive) {
        // positive L-space knots are fibred with positive twist sign
        if (h.fibred && !*h.fibred)
            fail(Code::InconsistentAttrs, "a positive L-space knot is fibred");
        if (h.fdtc == FdtcSign::Negative || h.fdtc == FdtcSign::Zero)
            fail(Code::InconsistentAttrs, "a positive L-space knot has positive twist sign");
        h.fibred = true;
        h.fdtc = FdtcSign::Positive;
    }
    if (h.l_space_knot == LSpaceKnotSign::Negative) {
        if (h.fibred && !*h.fibred)
            fail(Code::InconsistentAttrs, "a negative L-space knot is fibred");
        if (h.fdtc == FdtcSign::Positive || h.fdtc == FdtcSign::Zero)
            fail(Code::InconsistentAttrs, "a negative L-space knot has negative twist sign");
        h.fibred = true;
        h.fdtc = FdtcSign::Negative;
    }
    if (h.persistently_foliar && *h.persistently_foliar &&
        h.l_space_knot != LSpaceKnotSign::Unset)
        fail(Code::InconsistentAttrs,
             "a persistently foliar knot admits no L-space surgery, so it is not an L-space knot");
    if (h.l_space_knot != LSpaceKnotSign::Unset && h.genus && *h.genus < 3)
        fail(Code::InconsistentAttrs, "a hyperbolic L-space knot has genus at least 3");
    if (h.fdtc != FdtcSign::Unknown) {
        // the twist coefficient is an invariant of the monodromy
        if (h.fibred && !*h.fibred)
            fail(Code::InconsistentAttrs, "a declared twist sign requires a fibred atom");
        h.fibred = true;
    }
    auto canon_set = [](std::vector<Slope>& v, const char* which) {
        for (const Slope& s : v)
            if (s.is_meridian())
                fail(Code::InconsistentAttrs,
                     std::string("declared ") + which + " surgery slope cannot be 1/0");
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    canon_set(h.known_lo_slopes, "LO");
    canon_set(h.known_not_lo_slopes, "non-LO");
    for (const Slope& s : h.known_lo_slopes)
        if (std::find(h.known_not_lo_slopes.begin(), h.known_not_lo_slopes.end(), s) !=
            h.known_not_lo_slopes.end())
            fail(Code::InconsistentAttrs, "slope " + s.str() + " declared both LO and not LO");
    return h;
}

PatternAttrs validate_pattern_attrs(PatternAttrs p) {
    if (p.winding < 0) fail(Code::MalformedPattern, "winding number must be >= 0");
    if (p.braided && *p.braided && p.winding < 1)
        fail(Code::InconsistentAttrs, "a braided pattern has winding number >= 1");
    if (p.one_bridge_braid) {
        const ObbTriple& o = *p.one_bridge_braid;
        if (p.braided && !*p.braided)
            fail(Code::InconsistentAttrs, "a one-bridge braid is braided");
        if (o.w != p.winding)
            fail(Code::MalformedPattern, "one-bridge triple must match the winding number");
        if (o.w < 3) fail(Code::MalformedPattern, "one-bridge braids have w >= 3");
        bool pos = o.b >= 1 && o.t >= 1 && o.b <= o.w - 2 && o.t <= o.w - 2;
        bool neg = o.b <= -1 && o.t <= -1 && -o.b <= o.w - 2 && -o.t <= o.w - 2;
        if (!pos && !neg)
            fail(Code::MalformedPattern, "one-bridge triple requires 1 <= b,t <= w-2");
        p.braided = true;
    }
    if (p.solid_torus_surgery && *p.solid_torus_surgery) {
        bool cabled_false = p.cabled && !*p.cabled;
        if (p.one_bridge_braid || cabled_false) {
            // a non-cabled pattern with a solid-torus surgery is a one-bridge
            // braid with winding number >= 4; w = 4 forces a cable pattern
            if (p.winding <= 3)
                fail(Code::InconsistentAttrs,
                     "a one-bridge braid with a solid-torus surgery has winding number >= 4");
            if (p.winding == 4 && cabled_false)
                fail(Code::InconsistentAttrs,
                     "a one-bridge braid of winding number 4 with a solid-torus surgery is cabled");
        }
    }
    if (p.cabled && *p.cabled && p.winding == 1)
        fail(Code::InconsistentAttrs,
             "a cabled pattern has winding number divisible by its cable index >= 2");
    if (p.cabled && *p.cabled && p.winding == 0 && p.exterior_atoroidal && *p.exterior_atoroidal)
        fail(Code::InconsistentAttrs,
             "a cabled winding-zero pattern contains an essential torus in its exterior");
    if (p.closure_genus && *p.closure_genus < 0)
        fail(Code::MalformedPattern, "closure genus must be >= 0");
    if (p.pattern_closure) {
        p.pattern_closure = validate(p.pattern_closure);
        if (p.closure_genus) {
            auto g = genus(p.pattern_closure);
            if (g && *g != *p.closure_genus)
                fail(Code::InconsistentAttrs,
                     "declared closure genus disagrees with the closure expression");
        }
    }
    return p;
}

void flatten_sum(const KnotPtr& e, std::vector<KnotPtr>& out) {
    if (e->kind == KnotExpr::Kind::Sum) {
        for (const auto& s : e->summands) flatten_sum(s, out);
    } else {
        out.push_back(e);
    }
}

}  // namespace

KnotPtr validate(const KnotPtr& expr) {
    const KnotExpr& e = *expr;
    switch (e.kind) {
        case KnotExpr::Kind::Unknot:
            return KnotExpr::unknot();
        case KnotExpr::Kind::Torus: {
            Int m = e.m, n = e.n;
            if (m < 0) {
                m = -m;
                n = -n;
            }
            if (abs(m) < 2 || abs(n) < 2)
                fail(Code::InvalidTorusParams, "torus knot requires |m|,|n| >= 2");
            if (gcd(abs(m), abs(n)) != 1)
                fail(Code::InvalidTorusParams, "torus knot parameters must be coprime");
            return KnotExpr::torus(m, n);
        }
        case KnotExpr::Kind::Hyp:
            return KnotExpr::hyp_atom(validate_hyp_attrs(e.hyp), e.name);
        case KnotExpr::Kind::Cable: {
            if (e.m < 2) fail(Code::InvalidCableParams, "cable requires m >= 2");
            if (e.n == 0) fail(Code::InvalidCableParams, "cable requires n != 0");
            if (gcd(e.m, abs(e.n)) != 1)
                fail(Code::InvalidCableParams, "cable parameters must be coprime");
            KnotPtr c = validate(e.companion);
            if (c->kind == KnotExpr::Kind::Unknot)
                fail(Code::TrivialCompanion, "cable companion must be a non-trivial knot");
            return KnotExpr::cable(e.m, e.n, std::move(c));
        }
        case KnotExpr::Kind::Satellite: {
            PatternAttrs p = validate_pattern_attrs(e.pattern);
            KnotPtr c = validate(e.companion);
            if (c->kind == KnotExpr::Kind::Unknot)
                fail(Code::TrivialCompanion, "satellite companion must be a non-trivial knot");
            return KnotExpr::satellite(std::move(p), std::move(c));
        }
        case KnotExpr::Kind::Sum: {
            std::vector<KnotPtr> flat;
            for (const auto& s : e.summands) flatten_sum(s, flat);
            if (flat.size() < 2)
                fail(Code::MalformedPattern, "connected sum requires at least two summands");
            std::vector<KnotPtr> out;
            out.reserve(flat.size());
            for (const auto& s : flat) {
                KnotPtr v = validate(s);
                if (v->kind == KnotExpr::Kind::Unknot)
                    fail(Code::TrivialCompanion, "connected sum summand must be non-trivial");
                out.push_back(std::move(v));
            }
            std::sort(out.begin(), out.end(),
                      [](const KnotPtr& a, const KnotPtr& b) { return to_dsl(a) < to_dsl(b); });
            return KnotExpr::sum(std::move(out));
        }
    }
    fail(Code::MalformedPattern, "unknown node kind");
}

// ------------------------------------------------------- derived quantities

std::optional<Int> genus(const KnotPtr& expr) {
    const KnotExpr& e = *expr;
    switch (e.kind) {
        case KnotExpr::Kind::Unknot:
            return Int(0);
        case KnotExpr::Kind::Torus:
            return (abs(e.m) - 1) * (abs(e.n) - 1) / 2;
        case KnotExpr::Kind::Hyp:
            return e.hyp.genus;
        case KnotExpr::Kind::Cable: {
            auto g0 = genus(e.companion);
            if (!g0) return std::nullopt;
            return (e.m - 1) * (abs(e.n) - 1) / 2 + e.m * *g0;
        }
        case KnotExpr::Kind::Satellite: {
            std::optional<Int> cg = e.pattern.closure_genus;
            if (!cg && e.pattern.pattern_closure) cg = genus(e.pattern.pattern_closure);
            auto g0 = genus(e.companion);
            if (!cg || !g0) return std::nullopt;
            return *cg + e.pattern.winding * *g0;
        }
        case KnotExpr::Kind::Sum: {
            Int total = 0;
            for (const auto& s : e.summands) {
                auto g = genus(s);
                if (!g) return std::nullopt;
                total += *g;
            }
            return total;
        }
    }
    return std::nullopt;
}

std::optional<Slope> cabling_slope(const KnotPtr& expr) {
    if (expr->kind == KnotExpr::Kind::Cable) return Slope(expr->m * expr->n, 1);
    // a satellite declared to have a cabled pattern has a cabling slope, but
    // the tree does not carry its parameters
    return std::nullopt;
}

namespace {

// Sums are searched through companions only: a pattern closure is auxiliary
// declared data, not a piece of the exterior.
bool contains_sum(const KnotPtr& e) {
    switch (e->kind) {
        case KnotExpr::Kind::Sum:
            return true;
        case KnotExpr::Kind::Cable:
        case KnotExpr::Kind::Satellite:
            return contains_sum(e->companion);
        default:
            return false;
    }
}

}  // namespace

Tri jsj_is_rooted_interval(const KnotPtr& expr) {
    if (contains_sum(expr)) return Tri::No;
    const KnotExpr* cur = expr.get();
    bool all_declared = true;
    while (true) {
        switch (cur->kind) {
            case KnotExpr::Kind::Unknot:
            case KnotExpr::Kind::Torus:
            case KnotExpr::Kind::Hyp:
                return all_declared ? Tri::Yes : Tri::Unknown;
            case KnotExpr::Kind::Cable:
                // cable spaces are atoroidal
                cur = cur->companion.get();
                break;
            case KnotExpr::Kind::Satellite:
                if (!(cur->pattern.exterior_atoroidal && *cur->pattern.exterior_atoroidal))
                    all_declared = false;  // the pattern may hide essential tori
                cur = cur->companion.get();
                break;
            case KnotExpr::Kind::Sum:
                return Tri::No;  // unreachable; contains_sum already caught it
        }
    }
}

KnotPtr mirror(const KnotPtr& expr) {
    const KnotExpr& e = *expr;
    switch (e.kind) {
        case KnotExpr::Kind::Unknot:
            return KnotExpr::unknot();
        case KnotExpr::Kind::Torus:
            return KnotExpr::torus(e.m, -e.n);
        case KnotExpr::Kind::Hyp: {
            HypAttrs h = e.hyp;
            if (h.fdtc == FdtcSign::Positive)
                h.fdtc = FdtcSign::Negative;
            else if (h.fdtc == FdtcSign::Negative)
                h.fdtc = FdtcSign::Positive;
            if (h.l_space_knot == LSpaceKnotSign::Positive)
                h.l_space_knot = LSpaceKnotSign::Negative;
            else if (h.l_space_knot == LSpaceKnotSign::Negative)
                h.l_space_knot = LSpaceKnotSign::Positive;
            if (h.degeneracy_locus) h.degeneracy_locus->b = -h.degeneracy_locus->b;
            for (Slope& s : h.known_lo_slopes) s = s.negated();
            for (Slope& s : h.known_not_lo_slopes) s = s.negated();
            std::sort(h.known_lo_slopes.begin(), h.known_lo_slopes.end());
            std::sort(h.known_not_lo_slopes.begin(), h.known_not_lo_slopes.end());
            return KnotExpr::hyp_atom(std::move(h), e.name);
        }
        case KnotExpr::Kind::Cable:
            return KnotExpr::cable(e.m, -e.n, mirror(e.companion));
        case KnotExpr::Kind::Satellite: {
            PatternAttrs p = e.pattern;
            if (p.one_bridge_braid) {
                p.one_bridge_braid->b = -p.one_bridge_braid->b;
                p.one_bridge_braid->t = -p.one_bridge_braid->t;
            }
            if (p.pattern_closure) p.pattern_closure = mirror(p.pattern_closure);
            return KnotExpr::satellite(std::move(p), mirror(e.companion));
        }
        case KnotExpr::Kind::Sum: {
            std::vector<KnotPtr> s;
            s.reserve(e.summands.size());
            for (const auto& x : e.summands) s.push_back(mirror(x));
            std::sort(s.begin(), s.end(),
                      [](const KnotPtr& a, const KnotPtr& b) { return to_dsl(a) < to_dsl(b); });
            return KnotExpr::sum(std::move(s));
        }
    }
    return expr;
}

Int total_winding(const KnotPtr& expr, const Int& depth) {
    if (depth == 0) return 1;
    switch (expr->kind) {
        case KnotExpr::Kind::Cable:
            return expr->m * total_winding(expr->companion, depth - 1);
        case KnotExpr::Kind::Satellite:
            return expr->pattern.winding * total_winding(expr->companion, depth - 1);
        case KnotExpr::Kind::Sum:
            if (depth == 1) return 1;  // summand boundary torus has winding 1
            throw DepthExceededError("total_winding: chain ends at the connected-sum boundary");
        default:
            throw DepthExceededError("total_winding: depth exceeds the constructor chain");
    }
}

Int root_winding(const KnotPtr& expr) {
    switch (expr->kind) {
        case KnotExpr::Kind::Cable: return expr->m;
        case KnotExpr::Kind::Satellite: return expr->pattern.winding;
        case KnotExpr::Kind::Sum: return 1;
        default: return 1;
    }
}

Tri derived_fibred(const KnotPtr& expr) {
    switch (expr->kind) {
        case KnotExpr::Kind::Unknot:
        case KnotExpr::Kind::Torus:
            return Tri::Yes;
        case KnotExpr::Kind::Hyp:
            if (expr->hyp.fibred) return *expr->hyp.fibred ? Tri::Yes : Tri::No;
            return Tri::Unknown;
        case KnotExpr::Kind::Sum: {
            // a connected sum fibres exactly when every summand does
            bool all = true;
            for (const auto& s : expr->summands) {
                Tri t = derived_fibred(s);
                if (t == Tri::No) return Tri::No;
                if (t != Tri::Yes) all = false;
            }
            return all ? Tri::Yes : Tri::Unknown;
        }
        default:
            return Tri::Unknown;
    }
}

FdtcSign derived_fdtc(const KnotPtr& expr) {
    switch (expr->kind) {
        case KnotExpr::Kind::Torus:
            return expr->n >= 2 ? FdtcSign::Positive : FdtcSign::Negative;
        case KnotExpr::Kind::Hyp:
            return expr->hyp.fdtc;
        default:
            return FdtcSign::Unknown;
    }
}

Tri derived_persistently_foliar(const KnotPtr& expr) {
    switch (expr->kind) {
        case KnotExpr::Kind::Hyp:
            if (expr->hyp.persistently_foliar)
                return *expr->hyp.persistently_foliar ? Tri::Yes : Tri::No;
            return Tri::Unknown;
        case KnotExpr::Kind::Torus:
            return Tri::No;  // torus knots admit L-space surgeries
        case KnotExpr::Kind::Sum:
            // the sum of a persistently foliar knot with anything is
            // persistently foliar
            for (const auto& s : expr->summands)
                if (derived_persistently_foliar(s) == Tri::Yes) return Tri::Yes;
            return Tri::Unknown;
        default:
            return Tri::Unknown;
    }
}

Tri derived_positive_lspace(const KnotPtr& expr) {
    switch (expr->kind) {
        case KnotExpr::Kind::Unknot:
            return Tri::No;
        case KnotExpr::Kind::Torus:
            return expr->n >= 2 ? Tri::Yes : Tri::No;
        case KnotExpr::Kind::Hyp:
            switch (expr->hyp.l_space_knot) {
                case LSpaceKnotSign::Positive: return Tri::Yes;
                case LSpaceKnotSign::Negative: return Tri::No;
                default: return Tri::Unknown;
            }
        case KnotExpr::Kind::Cable: {
            Tri c = derived_positive_lspace(expr->companion);
            if (c == Tri::No) return Tri::No;
            if (c != Tri::Yes) return Tri::Unknown;
            auto g0 = genus(expr->companion);
            if (!g0) return Tri::Unknown;
            // the cable of a positive L-space knot is a positive L-space
            // knot exactly when n/m > 2*g0 - 1
            return expr->n > expr->m * (2 * *g0 - 1) ? Tri::Yes : Tri::No;
        }
        case KnotExpr::Kind::Sum:
            return Tri::No;  // L-space knots are prime
        default:
            return Tri::Unknown;
    }
}

CableStatus cable_status(const KnotPtr& expr) {
    switch (expr->kind) {
        case KnotExpr::Kind::Cable:
            return {CableStatus::Kind::CableKnown, Slope(expr->m * expr->n, 1)};
        case KnotExpr::Kind::Satellite: {
            const PatternAttrs& p = expr->pattern;
            if (p.cabled && *p.cabled) return {CableStatus::Kind::CableUnknown, Slope()};
            if (p.cabled && !*p.cabled) return {CableStatus::Kind::NotCable, Slope()};
            if (p.winding == 1) return {CableStatus::Kind::NotCable, Slope()};
            // a cabled pattern of winding number zero contains an essential
            // torus in its solid-torus exterior
            if (p.winding == 0 && p.exterior_atoroidal && *p.exterior_atoroidal)
                return {CableStatus::Kind::NotCable, Slope()};
            return {CableStatus::Kind::CableUnknown, Slope()};
        }
        default:
            // atoms are atoroidal and sums are prime, so neither is a cable
            return {CableStatus::Kind::NotCable, Slope()};
    }
}

bool maybe_cabling_slope(const KnotPtr& expr, const Slope& s) {
    CableStatus st = cable_status(expr);
    switch (st.kind) {
        case CableStatus::Kind::NotCable:
            return false;
        case CableStatus::Kind::CableKnown:
            return s == st.slope;
        case CableStatus::Kind::CableUnknown: {
            if (!s.is_integer()) return false;
            Int a = abs(s.num());
            if (a < 2) return false;
            const Int& w = expr->pattern.winding;
            // the cable index m >= 2 divides both the winding number and mn
            return w == 0 || gcd(a, w) > 1;
        }
    }
    return false;
}

int tree_height(const KnotPtr& expr) {
    int h = 0;
    switch (expr->kind) {
        case KnotExpr::Kind::Cable:
            h = tree_height(expr->companion);
            break;
        case KnotExpr::Kind::Satellite:
            h = tree_height(expr->companion);
            if (expr->pattern.pattern_closure)
                h = std::max(h, tree_height(expr->pattern.pattern_closure));
            break;
        case KnotExpr::Kind::Sum:
            for (const auto& s : expr->summands) h = std::max(h, tree_height(s));
            break;
        default:
            return 0;
    }
    return h + 1;
}

}  // namespace dehn
