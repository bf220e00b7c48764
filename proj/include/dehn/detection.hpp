#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dehn/knot.hpp"

namespace dehn {

// Slope detection on the boundary of a knot exterior.  Facts are evaluated
// lazily as predicates; the slope sets involved (distance-one families, twist
// intervals) are infinite and never materialized.

enum class DetProp { LO, NLS, CTF };

inline const char* to_string(DetProp p) {
    switch (p) {
        case DetProp::LO: return "LO";
        case DetProp::NLS: return "NLS";
        case DetProp::CTF: return "CTF";
    }
    return "?";
}

struct Detection {
    Tri value = Tri::Unknown;
    std::vector<std::string> provenance;  // stable citation keys, see docs/rules.md
};

// Optional hook for the fact that an LO (resp. non-L-space) surgery slope is
// LO- (resp. NLS-) detected: the engine passes its own classifier here.
// Not consulted for CTF, where the corresponding implication is open.
using SurgeryOracle = std::function<Tri(const KnotPtr&, const Slope&, DetProp)>;

// Whether `s` is known to be LO-/NLS-/CTF-detected on the boundary of the
// exterior of `expr`.  Applies, in order: the longitude is detected for all
// three properties; slopes at distance one from the longitude are LO- and
// NLS-detected, and CTF-detected when the knot is fibred (or unconditionally
// under the opt-in conjecture flag, marked in the provenance); slopes in the
// strongly detected twist interval are CTF-detected; declared or
// oracle-supplied surgery facts give LO/NLS detection.
Detection detected(const KnotPtr& expr, const Slope& s, DetProp prop,
                   bool assume_ctf_conjecture = false, const SurgeryOracle* oracle = nullptr);

// Strong CTF detection: a taut foliation meeting the boundary in a linear
// foliation of slope `s`.  Yes for every rational slope of a persistently
// foliar knot, and for rational slopes in the open twist interval of a
// fibred knot with declared twist sign ((-inf,1), (-1,inf) or the whole line
// for positive, negative, zero).  No closure of the interval endpoints here;
// the engine handles the closed endpoint separately.
Detection strongly_ctf_detected(const KnotPtr& expr, const Slope& s);

}  // namespace dehn
