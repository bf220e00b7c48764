#include "dehn/engine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dehn/detection.hpp"
#include "dehn/farey.hpp"

namespace dehn {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

namespace {

enum class Prop { Reducible, Toroidal, Lo, Nls, Ctf, LSpace };

const char* prop_name(Prop p) {
    switch (p) {
        case Prop::Reducible: return "reducible";
        case Prop::Toroidal: return "toroidal";
        case Prop::Lo: return "lo";
        case Prop::Nls: return "nls";
        case Prop::Ctf: return "ctf";
        case Prop::LSpace: return "l_space";
    }
    return "?";
}

Tri flip(Tri t) {
    if (t == Tri::Yes) return Tri::No;
    if (t == Tri::No) return Tri::Yes;
    return Tri::Unknown;
}

// Verdict under construction.  Single writer per property: a second rule may
// confirm a value (its trace is kept as extra evidence) but never overturn
// one.  nls and l_space are strict duals and are written together.
class Builder {
public:
    Tri get(Prop p) const { return *slot(p); }

    void set(Prop p, Tri val, Trace t) {
        if (val == Tri::Unknown) return;
        t.property = prop_name(p);
        t.value = val;
        write(p, val, t);
        if (p == Prop::Nls) {
            t.property = prop_name(Prop::LSpace);
            t.value = flip(val);
            write(Prop::LSpace, flip(val), t);
        } else if (p == Prop::LSpace) {
            t.property = prop_name(Prop::Nls);
            t.value = flip(val);
            write(Prop::Nls, flip(val), t);
        }
    }

    void note(std::string s) { v.notes.push_back(std::move(s)); }
    void reduction(std::string desc, const KnotPtr& k, Slope s) {
        v.reductions.push_back({std::move(desc), to_dsl(k), std::move(s)});
    }

    Verdict take() { return std::move(v); }

private:
    Verdict v;

    const Tri* slot(Prop p) const { return const_cast<Builder*>(this)->slot_mut(p); }
    Tri* slot_mut(Prop p) {
        switch (p) {
            case Prop::Reducible: return &v.reducible;
            case Prop::Toroidal: return &v.toroidal;
            case Prop::Lo: return &v.lo;
            case Prop::Nls: return &v.nls;
            case Prop::Ctf: return &v.ctf;
            case Prop::LSpace: return &v.l_space;
        }
        return nullptr;
    }

    void write(Prop p, Tri val, const Trace& t) {
        Tri* cur = slot_mut(p);
        if (*cur == Tri::Unknown) {
            *cur = val;
            v.traces.push_back(t);
        } else if (*cur == val) {
            v.traces.push_back(t);
        } else {
            throw InconsistencyError(std::string("rule ") + t.rule + " derives " +
                                     prop_name(p) + "=" + to_string(val) +
                                     " but an earlier rule derived " + to_string(*cur));
        }
    }
};

Trace mk(const char* rule, const char* citation, std::vector<std::string> premises = {},
         bool conjectural = false) {
    Trace t;
    t.rule = rule;
    t.citation = citation;
    t.premises = std::move(premises);
    t.conjectural = conjectural;
    return t;
}

struct Ctx {
    bool conj = false;
    std::map<std::pair<const KnotExpr*, Slope>, Verdict> memo;
};

Verdict impl(const KnotPtr& k, const Slope& r, int depth, bool allow_mirror, Ctx& cx);

// Recursive sub-classification with memoization within one top-level query.
const Verdict& recurse(const KnotPtr& k, const Slope& r, int depth, Ctx& cx) {
    auto key = std::make_pair(k.get(), r);
    auto it = cx.memo.find(key);
    if (it != cx.memo.end()) return it->second;
    Verdict v = impl(k, r, depth - 1, false, cx);
    return cx.memo.emplace(std::move(key), std::move(v)).first->second;
}

std::string rules_of(const Verdict& v, const char* property) {
    std::string s;
    for (const Trace& t : v.traces) {
        if (t.property != property) continue;
        if (!s.empty()) s += ", ";
        s += t.rule;
    }
    return s.empty() ? std::string("unknown") : s;
}

// Is `a` a plausible cabling slope numerator for a satellite whose tree does
// not rule cabling out?  m >= 2 must divide both the winding number and mn.
bool plausible_cabling_integer(const Int& a, const Int& w) {
    if (abs(a) < 2) return false;
    return w == 0 || gcd(abs(a), w) > 1;
}

// True when r lies within distance one of some plausible cabling slope of an
// undetermined possibly-cable satellite; toroidality claims are withheld
// there.
bool near_unknown_cabling(const KnotPtr& k, const Slope& r) {
    if (cable_status(k).kind != CableStatus::Kind::CableUnknown) return false;
    const Int& P = r.num();
    const Int& Q = r.den();
    // generous bracket around P/Q catches every integer a with |P - aQ| <= 1
    for (Int a = P / Q - 2; a <= P / Q + 2; ++a)
        if (abs(P - a * Q) <= 1 && plausible_cabling_integer(a, k->pattern.winding)) return true;
    return false;
}

// Integer slopes at which the companion torus of a non-cable satellite might
// compress.  Empty when the pattern cannot be a one-bridge braid admitting a
// solid-torus surgery; two consecutive integers when the Gabai triple is
// declared; a symmetric band otherwise.
struct BraidWindow {
    bool possible = false;   // some integer window may exist
    bool exact = false;      // window is the two-slope set below
    Int lo = 0, hi = 0;      // declared window [lo, hi] (hi = lo + 1)
    bool contains(const Slope& r, const Int& w) const {
        if (!possible || !r.is_integer()) return false;
        const Int& a = r.num();
        if (exact) return a >= lo && a <= hi;
        Int band_lo = w + 1, band_hi = w * w - w - 1;
        return (a >= band_lo && a <= band_hi) || (a >= -band_hi && a <= -band_lo);
    }
};

BraidWindow braid_window(const PatternAttrs& p) {
    BraidWindow bw;
    const Int& w = p.winding;
    if (w < 5) return bw;  // a compressing non-cable pattern is a one-bridge braid with w >= 5
    if (p.braided && !*p.braided) return bw;
    bw.possible = true;
    if (p.one_bridge_braid) {
        const ObbTriple& o = *p.one_bridge_braid;
        Int a0 = o.t * o.w + o.b;
        bw.exact = true;
        if (o.b > 0) {
            bw.lo = a0;
            bw.hi = a0 + 1;
        } else {  // mirrored braid: the window is negated
            bw.lo = a0 - 1;
            bw.hi = a0;
        }
    }
    return bw;
}

// ------------------------------------------------------------------- rules

void rule_reducible(const KnotPtr& k, const Slope& r, Builder& v) {
    switch (k->kind) {
        case KnotExpr::Kind::Torus: {
            bool at_cabling = r == Slope(k->m * k->n, 1);
            v.set(Prop::Reducible, at_cabling ? Tri::Yes : Tri::No,
                  mk("R-red", "fact:torus-knot-reducible",
                     {at_cabling ? "surgery along mn splits into two lens spaces"
                                 : "torus-knot surgery is reducible only along mn"}));
            v.set(Prop::Toroidal, Tri::No,
                  mk("R-red", "fact:torus-knot-atoroidal",
                     {"torus-knot surgeries are Seifert fibred or connected sums of lens spaces"}));
            return;
        }
        case KnotExpr::Kind::Hyp:
            v.set(Prop::Reducible, Tri::No, mk("R-red", "fact:atom-irreducible"));
            return;
        case KnotExpr::Kind::Sum:
            v.set(Prop::Reducible, Tri::No,
                  mk("R-red", "cor:satellite-reducible",
                     {"composite knots are prime, hence not cable knots"}));
            return;
        case KnotExpr::Kind::Cable: {
            bool at_cabling = r == Slope(k->m * k->n, 1);
            v.set(Prop::Reducible, at_cabling ? Tri::Yes : Tri::No,
                  mk("R-red", "cor:satellite-reducible"));
            return;
        }
        case KnotExpr::Kind::Satellite:
            if (maybe_cabling_slope(k, r)) {
                v.note("slope could be the cabling slope of an undetermined cabled pattern; "
                       "reducibility left unknown");
            } else {
                v.set(Prop::Reducible, Tri::No, mk("R-red", "cor:satellite-reducible"));
            }
            return;
        default:
            return;
    }
}

void rule_cable_lens(const KnotPtr& k, const Slope& r, int depth, Builder& v, Ctx& cx) {
    if (k->kind != KnotExpr::Kind::Cable) return;
    if (r != Slope(k->m * k->n, 1)) return;
    Slope residual(k->n, k->m);
    const Verdict& sub = recurse(k->companion, residual, depth, cx);
    std::string decomp = "K(mn) = K0(n/m) # L(m,n)";
    v.set(Prop::Lo, Tri::No, mk("R-red-lens", "red:cable-lens-summand", {decomp, "a lens space summand obstructs left-orderability"}));
    v.set(Prop::Ctf, Tri::No, mk("R-red-lens", "red:cable-lens-summand", {decomp, "a reducible manifold carries no taut foliation"}));
    if (sub.l_space != Tri::Unknown)
        v.set(Prop::LSpace, sub.l_space,
              mk("R-red-lens", "red:cable-lens-summand",
                 {decomp, "L-space status of the companion surgery: " + rules_of(sub, "l_space")}));
    if (sub.toroidal != Tri::Unknown)
        v.set(Prop::Toroidal, sub.toroidal,
              mk("R-red-lens", "red:cable-lens-summand",
                 {decomp, "essential tori live in the companion summand"}));
    v.reduction("cabling-slope surgery splits off a lens space; residual companion surgery",
                k->companion, residual);
    if (!sub.notes.empty()) v.note("companion classification: " + sub.notes.front());
}

void rule_cable_compress(const KnotPtr& k, const Slope& r, int depth, Builder& v, Ctx& cx) {
    if (k->kind != KnotExpr::Kind::Cable) return;
    Slope cab(k->m * k->n, 1);
    Int d = distance(r, cab);
    if (d == 0) return;  // handled by R-red-lens
    if (d == 1) {
        Slope reduced(r.num(), r.den() * k->m * k->m);
        const Verdict& sub = recurse(k->companion, reduced, depth, cx);
        std::string hom = "K(p/q) = K0(p/(m^2 q)): the companion torus compresses";
        auto copy = [&](Prop p, Tri val, const char* field) {
            if (val != Tri::Unknown)
                v.set(p, val,
                      mk("R-compress", "red:cable-distance-one",
                         {hom, std::string(field) + " of the companion surgery: " + rules_of(sub, field)}));
        };
        copy(Prop::Reducible, sub.reducible, "reducible");
        copy(Prop::Toroidal, sub.toroidal, "toroidal");
        copy(Prop::Lo, sub.lo, "lo");
        copy(Prop::Ctf, sub.ctf, "ctf");
        copy(Prop::Nls, sub.nls, "nls");
        v.reduction("slope at distance one from the cabling slope; surgery is surgery on the companion",
                    k->companion, reduced);
        if (!sub.notes.empty()) v.note("companion classification: " + sub.notes.front());
    } else {
        v.set(Prop::Toroidal, Tri::Yes,
              mk("R-compress", "thm:cable-surgery-structure",
                 {"distance from the cabling slope is at least two, so the companion torus survives"}));
    }
}

void rule_satellite_toroidal(const KnotPtr& k, const Slope& r, int depth, Builder& v, Ctx& cx) {
    switch (k->kind) {
        case KnotExpr::Kind::Sum:
            // every summand torus has winding one, so it survives all
            // rational surgeries
            v.set(Prop::Toroidal, Tri::Yes,
                  mk("R-compress-1bb", "thm:cable-surgery-structure",
                     {"winding-one summand tori are incompressible after every rational surgery"}));
            return;
        case KnotExpr::Kind::Satellite:
            break;
        default:
            return;
    }
    const PatternAttrs& pat = k->pattern;
    BraidWindow bw = braid_window(pat);
    bool near_cab = near_unknown_cabling(k, r);
    bool in_window = bw.contains(r, pat.winding);
    if (!near_cab && !in_window) {
        v.set(Prop::Toroidal, Tri::Yes,
              mk("R-compress-1bb", "thm:cable-surgery-structure",
                 {"the companion torus compresses only for one-bridge-braid windows or near a cabling slope"}));
        return;
    }
    if (in_window && pat.one_bridge_braid &&
        cable_status(k).kind == CableStatus::Kind::NotCable) {
        Slope reduced(r.num(), r.den() * pat.winding * pat.winding);
        const Verdict& sub = recurse(k->companion, reduced, depth, cx);
        v.reduction("slope in the declared one-bridge window; if the companion torus compresses, "
                    "the surgery is surgery on the companion",
                    k->companion, reduced);
        if (sub.toroidal == Tri::Yes)
            v.set(Prop::Toroidal, Tri::Yes,
                  mk("R-compress-1bb", "red:one-bridge-compression",
                     {"toroidal whether or not the companion torus compresses"}));
        else
            v.note("slope lies in the declared one-bridge window; compressibility unknown");
    } else if (in_window) {
        v.note("slope lies in a possible one-bridge window; toroidality left unknown");
    } else {
        v.note("slope is near a plausible cabling slope of an undetermined cabled pattern; "
               "toroidality left unknown");
    }
}

void rule_torus(const KnotPtr& k, const Slope& r, Builder& v) {
    if (k->kind != KnotExpr::Kind::Torus) return;
    // LO = NLS = CTF exactly below mn - m - n; L-spaces at and above
    bool positive = k->n >= 2;
    Int bound = positive ? Int(k->m * k->n - k->m - k->n)
                         : Int(-(k->m * abs(k->n) - k->m - abs(k->n)));
    int c = compare_rational(r, bound, 1);
    bool yes_side = positive ? c < 0 : c > 0;
    if (yes_side) {
        std::vector<std::string> why = {"p/q on the LO side of 2g-1 = mn-m-n"};
        v.set(Prop::Lo, Tri::Yes, mk("R-torus", "thm:torus-knot-lo-range", why));
        v.set(Prop::Nls, Tri::Yes, mk("R-torus", "thm:torus-knot-lo-range", why));
        v.set(Prop::Ctf, Tri::Yes, mk("R-torus", "thm:torus-knot-lo-range", why));
    } else {
        std::vector<std::string> why = {"p/q in the L-space surgery range of the torus knot"};
        v.set(Prop::Lo, Tri::No, mk("R-torus", "thm:torus-knot-lo-range", why));
        v.set(Prop::Nls, Tri::No, mk("R-torus", "thm:torus-knot-lo-range", why));
        v.set(Prop::Ctf, Tri::No, mk("R-torus", "thm:torus-knot-lo-range", why));
    }
}

void rule_winding_zero(const KnotPtr& k, const Slope& r, Builder& v) {
    if (k->kind != KnotExpr::Kind::Satellite || k->pattern.winding != 0) return;
    if (maybe_cabling_slope(k, r)) return;
    std::vector<std::string> why = {"winding-number-zero pattern; slope is not a cabling slope"};
    v.set(Prop::Lo, Tri::Yes, mk("R-w0", "thm:winding-zero", why));
    v.set(Prop::Nls, Tri::Yes, mk("R-w0", "thm:winding-zero", why));
}

bool winding_one_family(const Slope& r) {
    // slopes p/(np +- 1): q = +-1 mod |p| (every q when |p| <= 2)
    const Int& P = r.num();
    const Int& Q = r.den();
    if (P == 0) return true;
    Int a = abs(P);
    if (a == 1) return true;
    Int m = Q % a;
    return m == 1 || m == a - 1;
}

void rule_winding_one(const KnotPtr& k, const Slope& r, Builder& v) {
    if (k->kind != KnotExpr::Kind::Satellite || k->pattern.winding != 1) return;
    if (!winding_one_family(r)) return;
    std::vector<std::string> why = {"winding-number-one pattern and q = np +- 1"};
    v.set(Prop::Lo, Tri::Yes, mk("R-w1", "thm:winding-one", why));
    v.set(Prop::Nls, Tri::Yes, mk("R-w1", "thm:winding-one", why));
}

void rule_farey(const KnotPtr& k, const Slope& r, Builder& v) {
    const KnotExpr* cur = k.get();
    long chain = 0;
    while (cur->kind == KnotExpr::Kind::Satellite && cur->pattern.winding == 1) {
        ++chain;
        cur = cur->companion.get();
    }
    if (chain < 2) return;
    if (!ball_membership(r, chain)) return;
    std::vector<std::string> why = {"iterated winding-one satellite of length " +
                                    std::to_string(chain) +
                                    "; slope lies in the Farey ball of that radius"};
    v.set(Prop::Lo, Tri::Yes, mk("R-farey", "thm:farey-ball", why));
    v.set(Prop::Nls, Tri::Yes, mk("R-farey", "thm:farey-ball", why));
}

void rule_split(const KnotPtr& k, const Slope& r, Builder& v) {
    if (jsj_is_rooted_interval(k) != Tri::No) return;
    if (maybe_cabling_slope(k, r)) return;
    bool composite = k->kind == KnotExpr::Kind::Sum;
    const char* cite = composite ? "cor:composite-lo-nls" : "thm:split-tori";
    std::vector<std::string> why = {composite
                                        ? "all rational surgeries on a composite knot"
                                        : "two essential tori cobound with the boundary; slope is not a cabling slope"};
    v.set(Prop::Lo, Tri::Yes, mk("R-split", cite, why));
    v.set(Prop::Nls, Tri::Yes, mk("R-split", cite, why));
}

const KnotExpr* chain_sum_node(const KnotPtr& k) {
    const KnotExpr* cur = k.get();
    while (cur->kind == KnotExpr::Kind::Cable || cur->kind == KnotExpr::Kind::Satellite)
        cur = cur->companion.get();
    return cur->kind == KnotExpr::Kind::Sum ? cur : nullptr;
}

void rule_split_ctf(const KnotPtr& k, const Slope& r, Builder& v) {
    const KnotExpr* sum = chain_sum_node(k);
    if (!sum) return;
    if (maybe_cabling_slope(k, r)) return;
    int fibred = 0;
    for (const auto& s : sum->summands)
        if (derived_fibred(s) == Tri::Yes) ++fibred;
    if (fibred < 2) return;
    bool composite = k->kind == KnotExpr::Kind::Sum;
    v.set(Prop::Ctf, Tri::Yes,
          mk("R-split-ctf", composite ? "cor:ctf-composite-fibred" : "thm:ctf-split-fibred",
             {"two summand tori each bound a fibred knot exterior"}));
}

void rule_composite_pf(const KnotPtr& k, const Slope&, Builder& v) {
    if (k->kind != KnotExpr::Kind::Sum) return;
    for (const auto& s : k->summands) {
        if (derived_persistently_foliar(s) == Tri::Yes) {
            v.set(Prop::Ctf, Tri::Yes,
                  mk("R-composite-pf", "cor:composite-pf-ctf",
                     {"a persistently foliar summand"}));
            return;
        }
    }
}

void rule_pattern(const KnotPtr& k, const Slope& r, int depth, Builder& v, Ctx& cx) {
    if (k->kind != KnotExpr::Kind::Satellite) return;
    const KnotPtr& closure = k->pattern.pattern_closure;
    if (!closure || closure->kind == KnotExpr::Kind::Unknot) return;
    const Verdict& sub = recurse(closure, r, depth, cx);
    if (sub.lo == Tri::Yes)
        v.set(Prop::Lo, Tri::Yes,
              mk("R-pattern", "prop:pattern-to-satellite",
                 {"the pattern closure surgery is LO: " + rules_of(sub, "lo")}));
}

void rule_companion_lo(const KnotPtr& k, const Slope& r, int depth, Builder& v, Ctx& cx) {
    if (k->kind != KnotExpr::Kind::Cable && k->kind != KnotExpr::Kind::Satellite) return;
    Int w = root_winding(k);
    if (w < 1) return;
    if (maybe_cabling_slope(k, r)) return;
    Slope img = satellite_image(r, w);
    const Verdict& sub = recurse(k->companion, img, depth, cx);
    if (sub.lo == Tri::Yes)
        v.set(Prop::Lo, Tri::Yes,
              mk("R-companion-lo", "prop:companion-to-satellite",
                 {"companion surgery at r/w^2 is LO: " + rules_of(sub, "lo")}));
    if (sub.nls == Tri::Yes)
        v.set(Prop::Nls, Tri::Yes,
              mk("R-companion-lo", "prop:companion-to-satellite",
                 {"companion surgery at r/w^2 is NLS: " + rules_of(sub, "nls")}));
}

void rule_companion_ctf(const KnotPtr& k, const Slope& r, Builder& v) {
    Int w;
    std::vector<KnotPtr> companions;
    if (k->kind == KnotExpr::Kind::Cable || k->kind == KnotExpr::Kind::Satellite) {
        w = root_winding(k);
        if (w < 1) return;
        companions.push_back(k->companion);
    } else if (k->kind == KnotExpr::Kind::Sum) {
        // a composite is a winding-one satellite of each summand
        w = 1;
        companions = k->summands;
    } else {
        return;
    }
    if (maybe_cabling_slope(k, r)) return;
    Slope img = satellite_image(r, w);
    for (const auto& c : companions) {
        if (derived_persistently_foliar(c) == Tri::Yes) {
            v.set(Prop::Ctf, Tri::Yes,
                  mk("R-companion-ctf", "thm:persistently-foliar-companion",
                     {"persistently foliar companion of winding number >= 1"}));
            return;
        }
        Detection det = strongly_ctf_detected(c, img);
        if (det.value == Tri::Yes) {
            std::string keys;
            for (const auto& p : det.provenance) keys += (keys.empty() ? "" : ", ") + p;
            v.set(Prop::Ctf, Tri::Yes,
                  mk("R-companion-ctf", "prop:ctf-companion-strong",
                     {"r/w^2 is strongly CTF-detected in the companion exterior (" + keys + ")"}));
            return;
        }
    }
}

void rule_strong_root(const KnotPtr& k, const Slope& r, Builder& v) {
    Detection det = strongly_ctf_detected(k, r);
    if (det.value != Tri::Yes) return;
    std::string keys;
    for (const auto& p : det.provenance) keys += (keys.empty() ? "" : ", ") + p;
    v.set(Prop::Ctf, Tri::Yes,
          mk("R-strong-root", "prop:strong-detection-fills",
             {"the slope is strongly CTF-detected in the exterior (" + keys + ")"}));
}

void rule_winding_zero_ctf(const KnotPtr& k, const Slope& r, Builder& v) {
    if (k->kind != KnotExpr::Kind::Satellite || k->pattern.winding != 0) return;
    if (derived_fibred(k->companion) != Tri::Yes) return;
    if (maybe_cabling_slope(k, r)) return;
    v.set(Prop::Ctf, Tri::Yes,
          mk("R-w0-ctf", "thm:ctf-winding-zero-fibred",
             {"winding-zero torus bounding a fibred knot exterior"}));
}

void rule_fdtc(const KnotPtr& k, const Slope& r, Builder& v) {
    if (k->kind != KnotExpr::Kind::Cable && k->kind != KnotExpr::Kind::Satellite) return;
    Int w = root_winding(k);
    if (w < 1) return;
    if (derived_fibred(k->companion) != Tri::Yes) return;
    FdtcSign sign = derived_fdtc(k->companion);
    if (sign == FdtcSign::Unknown) return;
    if (maybe_cabling_slope(k, r)) return;
    Int w2 = w * w;
    bool in_interval = false;
    const char* interval = "";
    switch (sign) {
        case FdtcSign::Positive:
            in_interval = compare_rational(r, w2, 1) <= 0;
            interval = "(-inf, w^2]";
            break;
        case FdtcSign::Negative:
            in_interval = compare_rational(r, -w2, 1) >= 0;
            interval = "[-w^2, inf)";
            break;
        case FdtcSign::Zero:
            in_interval = true;
            interval = "(-inf, inf)";
            break;
        default:
            return;
    }
    if (!in_interval) return;
    v.set(Prop::Ctf, Tri::Yes,
          mk("R-fdtc", "prop:fdtc-interval",
             {std::string("fibred companion with declared twist sign; slope in ") + interval}));
}

bool positive_satellite_lspace(const KnotPtr& k) {
    if (k->kind != KnotExpr::Kind::Cable && k->kind != KnotExpr::Kind::Satellite) return false;
    return derived_positive_lspace(k) == Tri::Yes;
}

void rule_plsk_range(const KnotPtr& k, const Slope& r, Builder& v) {
    if (!positive_satellite_lspace(k)) return;
    Int w = root_winding(k);
    if (compare_rational(r, w * w, 1) > 0) return;
    v.set(Prop::Ctf, Tri::Yes,
          mk("R-psL", "cor:plsk-ctf-range",
             {"positive satellite L-space knot and slope <= w^2"}));
}

void rule_plsk_nine(const KnotPtr& k, const Slope& r, Builder& v) {
    if (!positive_satellite_lspace(k)) return;
    if (compare_rational(r, 9, 1) > 0) return;
    bool window = false;
    if (k->kind == KnotExpr::Kind::Cable && k->m == 2 &&
        k->companion->kind == KnotExpr::Kind::Torus && k->companion->m == 2 &&
        k->companion->n == 3 && (k->n == 3 || k->n == 5 || k->n == 7)) {
        window = compare_rational(r, k->n + 2, 1) >= 0;
    }
    if (window) {
        std::vector<std::string> why = {"cable of the trefoil with slope in [n+2, 9]"};
        v.set(Prop::LSpace, Tri::Yes, mk("R-psL9", "thm:plsk-ctf-nine", why));
        v.set(Prop::Ctf, Tri::No, mk("R-psL9", "thm:plsk-ctf-nine", why));
    } else {
        std::vector<std::string> why = {
            "positive satellite L-space knot; slope <= 9 outside the L-space window"};
        v.set(Prop::Ctf, Tri::Yes, mk("R-psL9", "thm:plsk-ctf-nine", why));
        v.set(Prop::Nls, Tri::Yes, mk("R-psL9", "thm:plsk-ctf-nine", why));
    }
}

void rule_sat_small_p(const KnotPtr& k, const Slope& r, Builder& v) {
    Int p = abs(r.num());
    const Int& q = r.den();
    if (p < 1 || p > 4 || q < 2) return;
    switch (k->kind) {
        case KnotExpr::Kind::Sum:
            break;
        case KnotExpr::Kind::Cable:
            if (distance(r, Slope(k->m * k->n, 1)) < 2) return;  // the (2,eps)-cable exception
            break;
        case KnotExpr::Kind::Satellite:
            if (near_unknown_cabling(k, r)) return;
            break;
        default:
            return;
    }
    v.set(Prop::Lo, Tri::Yes,
          mk("R-sat-smallp", "prop:satellite-small-p",
             {"satellite, 1 <= |p| <= 4, |q| >= 2: the surgery is irreducible and toroidal"}));
}

void rule_psa(const KnotPtr& k, const Slope& r, Builder& v) {
    if (k->kind != KnotExpr::Kind::Hyp) return;
    Int p = abs(r.num());
    if (p != 1 && p != 2) return;
    const Int& P = r.num();
    const Int& Q = r.den();
    if (k->hyp.degeneracy_locus) {
        const DegeneracyLocus& d = *k->hyp.degeneracy_locus;
        Int iota = d.form == DegeneracyLocus::Form::BMu ? Int(d.b * Q) : Int(d.b * Q - P);
        if (abs(iota) >= 2)
            v.set(Prop::Lo, Tri::Yes,
                  mk("R-psa", "thm:psa-flow-lo",
                     {"declared degeneracy locus meets the slope with intersection >= 2; "
                      "H_1 is a Z/2 vector space"}));
        return;
    }
    // No declared locus: require intersection >= 2 for every admissible
    // degeneracy locus b*mu or b*mu + lambda, b != 0.
    if (Q < 2) return;
    Int pm1 = abs(P - 1), pp1 = abs(P + 1);
    bool window = (P != 1 && pm1 % Q == 0) || (P != -1 && pp1 % Q == 0);
    if (window) return;
    v.set(Prop::Lo, Tri::Yes,
          mk("R-psa", "thm:psa-flow-lo",
             {"every admissible degeneracy locus meets the slope with intersection >= 2",
              "thm:degeneracy-locus-existence"}));
}

void rule_fibred_small_p(const KnotPtr& k, const Slope& r, Builder& v) {
    if (k->kind != KnotExpr::Kind::Hyp) return;
    Int p = abs(r.num());
    if ((p != 1 && p != 2) || r.den() < 2) return;
    const HypAttrs& h = k->hyp;
    if (h.fibred && *h.fibred)
        v.set(Prop::Lo, Tri::Yes,
              mk("R-fibred-smallp", "cor:fibred-small-p", {"fibred atom, p in {1,2}, |q| >= 2"}));
    if (h.alternating && *h.alternating)
        v.set(Prop::Lo, Tri::Yes,
              mk("R-fibred-smallp", "cor:alternating-small-p",
                 {"alternating atom, p in {1,2}, |q| >= 2"}));
    if (h.non_lo_branched_cover && *h.non_lo_branched_cover)
        v.set(Prop::Lo, Tri::Yes,
              mk("R-fibred-smallp", "cor:branched-cover-small-p",
                 {"some cyclic branched cover is not LO; p in {1,2}, |q| >= 2"}));
}

void rule_declared(const KnotPtr& k, const Slope& r, Builder& v) {
    if (k->kind != KnotExpr::Kind::Hyp) return;
    const auto& lo = k->hyp.known_lo_slopes;
    const auto& nlo = k->hyp.known_not_lo_slopes;
    if (std::find(lo.begin(), lo.end(), r) != lo.end())
        v.set(Prop::Lo, Tri::Yes, mk("R-declared", "fact:declared-slope", {"declared LO surgery slope"}));
    if (std::find(nlo.begin(), nlo.end(), r) != nlo.end())
        v.set(Prop::Lo, Tri::No, mk("R-declared", "fact:declared-slope", {"declared non-LO surgery slope"}));
}

void rule_small_homology(const KnotPtr&, const Slope& r, Builder& v) {
    Int p = abs(r.num());
    if (p < 1 || p > 4) return;
    if (v.get(Prop::Toroidal) != Tri::Yes || v.get(Prop::Reducible) != Tri::No) return;
    v.set(Prop::Lo, Tri::Yes,
          mk("R-smallH", "thm:small-homology-lo",
             {"irreducible toroidal surgery with |H_1| <= 4"}));
}

void rule_conjectural(const KnotPtr& k, const Slope& r, bool conj, Builder& v) {
    if (!conj) return;
    if (k->kind == KnotExpr::Kind::Satellite && k->pattern.winding == 0 &&
        !maybe_cabling_slope(k, r))
        v.set(Prop::Ctf, Tri::Yes,
              mk("R-w0-conj", "conj:ctf-detection",
                 {"CONJECTURAL: meridional CTF detection assumed"}, true));
    if (jsj_is_rooted_interval(k) == Tri::No && !maybe_cabling_slope(k, r))
        v.set(Prop::Ctf, Tri::Yes,
              mk("R-split-conj", "conj:ctf-detection",
                 {"CONJECTURAL: meridional CTF detection assumed"}, true));
}

void closure_pass(Builder& v) {
    if (v.get(Prop::Ctf) == Tri::Yes && v.get(Prop::Nls) == Tri::Unknown)
        v.set(Prop::Nls, Tri::Yes,
              mk("R-ctf-nls", "thm:ctf-implies-nls", {"a taut foliation obstructs being an L-space"}));
    if (v.get(Prop::Nls) == Tri::No && v.get(Prop::Ctf) == Tri::Unknown)
        v.set(Prop::Ctf, Tri::No,
              mk("R-ctf-nls", "thm:ctf-implies-nls", {"an L-space carries no taut foliation"}));
}

Verdict impl(const KnotPtr& k, const Slope& r, int depth, bool allow_mirror, Ctx& cx) {
    Builder v;
    if (depth < 0) {
        v.note("depth budget exhausted; properties left unknown");
        return v.take();
    }

    rule_reducible(k, r, v);
    rule_cable_lens(k, r, depth, v, cx);
    rule_cable_compress(k, r, depth, v, cx);
    rule_satellite_toroidal(k, r, depth, v, cx);
    rule_torus(k, r, v);
    rule_winding_zero(k, r, v);
    rule_winding_one(k, r, v);
    rule_farey(k, r, v);
    rule_split(k, r, v);
    rule_split_ctf(k, r, v);
    rule_composite_pf(k, r, v);
    rule_pattern(k, r, depth, v, cx);
    rule_companion_lo(k, r, depth, v, cx);
    rule_companion_ctf(k, r, v);
    rule_strong_root(k, r, v);
    rule_winding_zero_ctf(k, r, v);
    rule_fdtc(k, r, v);
    rule_plsk_range(k, r, v);
    rule_plsk_nine(k, r, v);
    rule_sat_small_p(k, r, v);
    rule_psa(k, r, v);
    rule_fibred_small_p(k, r, v);
    rule_declared(k, r, v);
    rule_small_homology(k, r, v);
    rule_conjectural(k, r, cx.conj, v);
    closure_pass(v);

    if (allow_mirror) {
        // verdict(K, r) = verdict(mirror K, -r): adopt anything the mirrored
        // query decides that the direct rules left open
        KnotPtr km = validate(mirror(k));
        Verdict mv = impl(km, r.negated(), depth, false, cx);
        Verdict result = v.take();
        auto place = [&](Tri& slot, Tri mirrored, const char* field) {
            if (slot != Tri::Unknown) {
                if (mirrored != Tri::Unknown && mirrored != slot)
                    throw InconsistencyError(std::string("mirror classification disagrees on ") +
                                             field);
                return;
            }
            if (mirrored == Tri::Unknown) return;
            slot = mirrored;
            Trace t = mk("R-mirror", "note:mirror-reduction",
                         {"classified the mirror image at the negated slope: " +
                          rules_of(mv, field)});
            t.property = field;
            t.value = mirrored;
            result.traces.push_back(t);
        };
        place(result.reducible, mv.reducible, "reducible");
        place(result.toroidal, mv.toroidal, "toroidal");
        place(result.lo, mv.lo, "lo");
        place(result.nls, mv.nls, "nls");
        place(result.ctf, mv.ctf, "ctf");
        place(result.l_space, mv.l_space, "l_space");
        if (result.nls != Tri::Unknown && result.l_space == Tri::Unknown)
            result.l_space = flip(result.nls);
        if (result.l_space != Tri::Unknown && result.nls == Tri::Unknown)
            result.nls = flip(result.l_space);
        if (result.nls != Tri::Unknown && result.l_space != flip(result.nls))
            throw InconsistencyError("nls / l_space duality violated after mirror merge");
        // closure pass over the merged verdict
        if (result.ctf == Tri::Yes && result.nls == Tri::Unknown) {
            result.nls = Tri::Yes;
            result.l_space = Tri::No;
            Trace t = mk("R-ctf-nls", "thm:ctf-implies-nls");
            t.property = "nls";
            t.value = Tri::Yes;
            result.traces.push_back(t);
        }
        if (result.nls == Tri::No && result.ctf == Tri::Unknown) {
            result.ctf = Tri::No;
            Trace t = mk("R-ctf-nls", "thm:ctf-implies-nls");
            t.property = "ctf";
            t.value = Tri::No;
            result.traces.push_back(t);
        }
        return result;
    }
    return v.take();
}

}  // namespace

Verdict classify(const Query& q) {
    if (!q.knot) throw Error("classify: missing knot");
    if (q.knot->kind == KnotExpr::Kind::Unknot)
        throw Error("classify: surgery verdicts are defined for non-trivial knots only");
    if (q.slope.is_meridian())
        throw Error("classify: the meridional filling is the 3-sphere; slope must be rational");
    Ctx cx;
    cx.conj = q.assume_ctf_conjecture;
    int depth = q.depth_budget >= 0 ? q.depth_budget : tree_height(q.knot) + 2;
    return impl(q.knot, q.slope, depth, true, cx);
}

namespace {

// Admissible shapes for the set of not-LO slopes with |p| in {1,2}.
bool shape_ok(const std::set<Slope>& no_set) {
    if (no_set.empty()) return true;
    auto subset_of = [&](std::vector<Slope> shape) {
        for (const Slope& s : no_set)
            if (std::find(shape.begin(), shape.end(), s) == shape.end()) return false;
        return true;
    };
    for (int eps : {1, -1}) {
        if (subset_of({Slope(eps, 1), Slope(2 * eps, 1)})) return true;
        if (subset_of({Slope(eps, 2), Slope(2 * eps, 3), Slope(eps, 1), Slope(2 * eps, 1)}))
            return true;
    }
    // the mu-type degeneracy locus allows both signs of the integer slopes
    return subset_of({Slope(1, 1), Slope(-1, 1), Slope(2, 1), Slope(-2, 1)});
}

}  // namespace

std::vector<std::pair<Slope, Verdict>> scan(const KnotPtr& knot, const std::vector<Slope>& slopes,
                                            int depth_budget, bool assume_ctf_conjecture) {
    std::vector<std::pair<Slope, Verdict>> out;
    out.reserve(slopes.size());
    for (const Slope& s : slopes) {
        Query q{knot, s, depth_budget, assume_ctf_conjecture};
        out.emplace_back(s, classify(q));
    }
    // small-p exceptional-shape assertion over the scanned results
    std::set<Slope> no_set;
    for (const auto& [s, v] : out) {
        Int p = abs(s.num());
        if ((p == 1 || p == 2) && v.lo == Tri::No) no_set.insert(s);
    }
    if (!shape_ok(no_set))
        throw InconsistencyError(
            "R-E-shape: the not-LO slopes with |p| in {1,2} do not fit an admissible "
            "exceptional-set shape");
    return out;
}

const std::vector<RuleInfo>& rule_catalog() {
    static const std::vector<RuleInfo> catalog = {
        {"R-red", "cor:satellite-reducible",
         "surgery on a satellite knot is reducible exactly for a cable knot at its cabling slope"},
        {"R-red", "fact:torus-knot-reducible",
         "a torus-knot surgery is reducible exactly along mn"},
        {"R-red", "fact:torus-knot-atoroidal",
         "torus-knot surgeries are atoroidal (Seifert fibred or sums of lens spaces)"},
        {"R-red", "fact:atom-irreducible",
         "rational surgeries on atoms are recorded as irreducible"},
        {"R-red-lens", "red:cable-lens-summand",
         "cabling-slope surgery splits as companion surgery # lens space: not LO, not CTF, and an "
         "L-space exactly when the companion surgery is"},
        {"R-compress", "red:cable-distance-one",
         "at distance one from the cabling slope the surgery is homeomorphic to a companion surgery"},
        {"R-compress", "thm:cable-surgery-structure",
         "at distance two or more from the cabling slope the companion torus survives: toroidal"},
        {"R-compress-1bb", "thm:cable-surgery-structure",
         "for a non-cable satellite the companion torus compresses only at declared one-bridge "
         "windows; elsewhere the surgery is toroidal"},
        {"R-compress-1bb", "red:one-bridge-compression",
         "inside a declared one-bridge window the surgery may become a companion surgery at r/w^2"},
        {"R-torus", "thm:torus-knot-lo-range",
         "torus-knot surgery is LO, NLS and CTF exactly below mn-m-n, an L-space at and above"},
        {"R-w0", "thm:winding-zero",
         "winding-number-zero satellite: every non-cabling rational surgery is LO and NLS"},
        {"R-w1", "thm:winding-one",
         "winding-number-one satellite: surgeries along p/(np+-1) are LO and NLS"},
        {"R-farey", "thm:farey-ball",
         "iterated winding-one satellites of length k: slopes within Farey distance k of 0 give LO "
         "and NLS surgeries"},
        {"R-split", "thm:split-tori",
         "two essential tori cobounding with the boundary force every non-cabling rational surgery "
         "to be LO and NLS"},
        {"R-split", "cor:composite-lo-nls",
         "all rational surgeries on a composite knot are LO and NLS"},
        {"R-split-ctf", "thm:ctf-split-fibred",
         "as R-split with both tori bounding fibred knot exteriors: CTF"},
        {"R-split-ctf", "cor:ctf-composite-fibred",
         "all rational surgeries on a composite fibred knot are CTF"},
        {"R-composite-pf", "cor:composite-pf-ctf",
         "every rational surgery on a composite knot with a persistently foliar summand is CTF"},
        {"R-pattern", "prop:pattern-to-satellite",
         "a satellite surgery is LO whenever the same surgery on the pattern closure is LO"},
        {"R-companion-lo", "prop:companion-to-satellite",
         "a non-cabling satellite surgery is LO (NLS) whenever the companion surgery at r/w^2 is"},
        {"R-companion-ctf", "prop:ctf-companion-strong",
         "a non-cabling satellite surgery is CTF when r/w^2 is strongly CTF-detected in the "
         "companion exterior"},
        {"R-companion-ctf", "thm:persistently-foliar-companion",
         "satellites with a persistently foliar companion and winding number >= 1: every "
         "non-cabling rational surgery is CTF"},
        {"R-strong-root", "prop:strong-detection-fills",
         "filling along a strongly CTF-detected slope yields a CTF manifold"},
        {"R-w0-ctf", "thm:ctf-winding-zero-fibred",
         "a winding-zero torus bounding a fibred knot exterior makes every non-cabling rational "
         "surgery CTF"},
        {"R-fdtc", "prop:fdtc-interval",
         "fibred companion with twist sign +/-/0: slopes in (-inf,w^2] / [-w^2,inf) / the whole "
         "line give CTF surgeries"},
        {"R-psL", "cor:plsk-ctf-range",
         "positive satellite L-space knots: slopes <= w^2 give CTF surgeries"},
        {"R-psL9", "thm:plsk-ctf-nine",
         "positive satellite L-space knots: slopes <= 9 give CTF (and NLS) surgeries except cables "
         "of the trefoil with slope in [n+2,9], which give L-spaces and are not CTF"},
        {"R-sat-smallp", "prop:satellite-small-p",
         "satellite surgeries with 1 <= |p| <= 4 and |q| >= 2 are LO (the lone exception reduces "
         "to a companion surgery)"},
        {"R-psa", "thm:psa-flow-lo",
         "hyperbolic atom, |p| in {1,2}: LO whenever the degeneracy locus meets the slope with "
         "intersection number >= 2"},
        {"R-psa", "thm:degeneracy-locus-existence",
         "every hyperbolic atom carries a flow with degeneracy locus b*mu or b*mu+lambda, b != 0"},
        {"R-fibred-smallp", "cor:fibred-small-p",
         "fibred atom: surgeries with p in {1,2} and |q| >= 2 are LO"},
        {"R-fibred-smallp", "cor:alternating-small-p",
         "alternating atom: surgeries with p in {1,2} and |q| >= 2 are LO"},
        {"R-fibred-smallp", "cor:branched-cover-small-p",
         "atom with a non-LO cyclic branched cover: surgeries with p in {1,2} and |q| >= 2 are LO"},
        {"R-declared", "fact:declared-slope", "declared LO / non-LO surgery slopes of an atom"},
        {"R-smallH", "thm:small-homology-lo",
         "an irreducible toroidal surgery with |H_1| <= 4 is LO"},
        {"R-w0-conj", "conj:ctf-detection",
         "under --assume-conjecture-1.6, winding-zero satellites get the CTF analogue of R-w0"},
        {"R-split-conj", "conj:ctf-detection",
         "under --assume-conjecture-1.6, split configurations get the CTF analogue of R-split"},
        {"R-ctf-nls", "thm:ctf-implies-nls",
         "a CTF manifold is NLS; an L-space is not CTF"},
        {"R-mirror", "note:mirror-reduction",
         "verdicts agree with those of the mirror image at the negated slope"},
        {"R-E-shape", "thm:small-p-exceptional-shape",
         "the not-LO slopes with |p| in {1,2} fit one of the admissible exceptional shapes"},
        {"R-declared", "rem:filling-detects",
         "an LO (non-L-space) filling slope is LO- (NLS-) detected"},
        {"R-strong-root", "def:persistently-foliar",
         "persistently foliar: every rational slope is strongly CTF-detected"},
        {"R-strong-root", "thm:roberts-interval",
         "fibred knots with twist sign +/-/0 have (-inf,1) / (-1,inf) / all rational slopes "
         "strongly CTF-detected"},
        {"R-companion-lo", "prop:longitude-detected",
         "the longitudinal slope of a knot manifold is LO-, NLS- and CTF-detected"},
        {"R-w1", "thm:distance-one-detection",
         "slopes at distance one from the longitude of an integer homology solid torus are LO- and "
         "NLS-detected; CTF-detected when it fibres"},
    };
    return catalog;
}

}  // namespace dehn
