#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dehn/slope.hpp"

namespace dehn {

// Tri-valued logic.  "No" is reserved for theorem-backed negative results;
// anything the rule set cannot decide stays Unknown.
enum class Tri { Unknown, Yes, No };

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "unknown";
    }
}

// Boundary curve system of a pseudo-Anosov flow on an atom's complement:
// b*mu or b*mu + lambda with b != 0.
struct DegeneracyLocus {
    enum class Form { BMu, BMuPlusLambda };
    Form form = Form::BMu;
    Int b = 1;

    bool operator==(const DegeneracyLocus& o) const { return form == o.form && b == o.b; }
};

enum class FdtcSign { Unknown, Positive, Negative, Zero };

// Which side of the L-space-knot dichotomy an atom is declared to sit on.
// A knot and its mirror cannot both be positive, so mirroring swaps the two
// declared states.
enum class LSpaceKnotSign { Unset, Positive, Negative };

struct HypAttrs {
    std::optional<Int> genus;             // Seifert genus, >= 1
    std::optional<bool> fibred;
    FdtcSign fdtc = FdtcSign::Unknown;    // sign of the fractional Dehn twist coefficient
    LSpaceKnotSign l_space_knot = LSpaceKnotSign::Unset;
    std::optional<bool> alternating;
    std::optional<bool> persistently_foliar;
    std::optional<DegeneracyLocus> degeneracy_locus;
    std::optional<bool> non_lo_branched_cover;  // some cyclic branched cover is known not LO
    std::vector<Slope> known_lo_slopes;         // declared LO surgery slopes
    std::vector<Slope> known_not_lo_slopes;     // declared non-LO surgery slopes
};

// Gabai triple (w,b,t) of a 1-bridge braid, 1 <= b,t <= w-2.  Storing both
// entries negated denotes the mirrored braid, whose solid-torus slopes are
// the negatives of the usual window {tw+b, tw+b+1}.
struct ObbTriple {
    Int w = 3, b = 1, t = 1;
    bool operator==(const ObbTriple& o) const { return w == o.w && b == o.b && t == o.t; }
};

class KnotExpr;
using KnotPtr = std::shared_ptr<const KnotExpr>;

struct PatternAttrs {
    Int winding = 0;                          // w >= 0
    std::optional<bool> braided;
    std::optional<ObbTriple> one_bridge_braid;
    std::optional<bool> solid_torus_surgery;  // pattern admits a surgery to a solid torus
    std::optional<bool> cabled;               // pattern is a cabled pattern
    std::optional<bool> exterior_atoroidal;   // pattern exterior in the solid torus is atoroidal
    KnotPtr pattern_closure;                  // the knot P(U); may be the unknot
    std::optional<Int> closure_genus;         // g(P(U))
};

// Algebraic knot description.  Immutable after validate(); knots are syntax,
// not geometry: everything the engine cannot derive from the constructors
// must be declared in the attrs, and undeclared means unknown.
class KnotExpr {
public:
    enum class Kind { Unknot, Torus, Hyp, Cable, Satellite, Sum };

    Kind kind = Kind::Unknot;

    // Torus/Cable parameters.  Torus: |m|,|n| >= 2 coprime, normalized to
    // m >= 2.  Cable: m >= 2, n != 0, coprime.
    Int m = 0, n = 0;

    std::string name;  // optional label for atoms
    HypAttrs hyp;
    PatternAttrs pattern;
    KnotPtr companion;             // Cable, Satellite
    std::vector<KnotPtr> summands; // Sum

    static KnotPtr unknot();
    static KnotPtr torus(Int m, Int n);
    static KnotPtr hyp_atom(HypAttrs attrs, std::string name = "");
    static KnotPtr cable(Int m, Int n, KnotPtr companion);
    static KnotPtr satellite(PatternAttrs pattern, KnotPtr companion);
    static KnotPtr sum(std::vector<KnotPtr> summands);
};

bool equal(const KnotPtr& a, const KnotPtr& b);

// Checks every structural invariant, flattens nested sums, sorts summands
// into canonical order and closes attribute implications (a positive L-space
// atom is fibred with positive twist sign, a declared twist sign implies
// fibredness).  Throws ValidationError naming the violated invariant.
// Idempotent: validate(validate(e)) == validate(e).
KnotPtr validate(const KnotPtr& expr);

// Canonical text form (the DSL surface syntax).  Injective on validated trees.
std::string to_dsl(const KnotPtr& expr);

// Seifert genus when the declared data determines it: torus knots by the
// closed form, cables and satellites by the Schubert additivity formulas,
// sums by additivity.  Absent whenever a needed input is absent.
std::optional<Int> genus(const KnotPtr& expr);

// The unique cabling slope mn/1 when the root constructor exhibits one.
std::optional<Slope> cabling_slope(const KnotPtr& expr);

// Whether the JSJ graph of the exterior is an interval rooted at the
// boundary piece.  No as soon as a connected sum appears anywhere in the
// tree; Yes for a pure chain of cables/satellites-with-atoroidal-patterns
// over an atom; Unknown otherwise.
Tri jsj_is_rooted_interval(const KnotPtr& expr);

// Mirror image: negates n in torus and cable nodes, flips twist and L-space
// signs, negates degeneracy loci and declared slope sets, mirrors the
// one-bridge data and recurses.  An involution on validated trees.
KnotPtr mirror(const KnotPtr& expr);

// Product of the winding numbers of the outermost `depth` constructors along
// the companion chain (m for a cable, w for a satellite, 1 for the summand
// boundary of a sum).  Throws DepthExceededError past the chain.
Int total_winding(const KnotPtr& expr, const Int& depth);

// ---- derived attribute facts (consumed by detection and the engine) ----

// Winding number of the root pattern (m for cables); 1 for sums viewed as
// satellites of a summand.  Only meaningful for satellite-class roots.
Int root_winding(const KnotPtr& expr);

Tri derived_fibred(const KnotPtr& expr);
FdtcSign derived_fdtc(const KnotPtr& expr);
Tri derived_persistently_foliar(const KnotPtr& expr);
// Positive L-space knot: torus knots with m,n >= 2, declared atoms, and
// cables over a positive L-space companion with n/m > 2*g0 - 1.
Tri derived_positive_lspace(const KnotPtr& expr);

// What the expression tree knows about the knot being a cable knot.
struct CableStatus {
    enum class Kind { NotCable, CableKnown, CableUnknown } kind = Kind::NotCable;
    Slope slope;  // meaningful for CableKnown
};
CableStatus cable_status(const KnotPtr& expr);

// True when `s` could be the cabling slope as far as the tree knows.  Exact
// for CableKnown; for CableUnknown only integer slopes |a| >= 2 compatible
// with the winding-number divisibility constraint qualify.
bool maybe_cabling_slope(const KnotPtr& expr, const Slope& s);

int tree_height(const KnotPtr& expr);

}  // namespace dehn
