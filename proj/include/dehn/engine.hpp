#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dehn/knot.hpp"

namespace dehn {

// One fired inference step.
struct Trace {
    std::string rule;      // rule id from the catalog, e.g. "R-torus"
    std::string citation;  // stable citation key, e.g. "thm:torus-knot-lo-range"
    std::string property;  // which verdict field it wrote
    Tri value = Tri::Unknown;
    std::vector<std::string> premises;
    bool conjectural = false;  // produced under --assume-conjecture-1.6
};

// A recorded homeomorphism (or possible homeomorphism) to a smaller query.
struct Reduction {
    std::string description;
    std::string knot;  // canonical DSL text of the reduced knot
    Slope slope;
};

struct Verdict {
    Tri reducible = Tri::Unknown;
    Tri toroidal = Tri::Unknown;
    Tri lo = Tri::Unknown;
    Tri nls = Tri::Unknown;
    Tri ctf = Tri::Unknown;
    Tri l_space = Tri::Unknown;
    std::vector<Trace> traces;
    std::vector<Reduction> reductions;
    std::vector<std::string> notes;
};

struct Query {
    KnotPtr knot;      // validated, non-trivial
    Slope slope;       // rational (1/0 is rejected: meridional filling is S^3)
    int depth_budget = -1;  // -1: defaults to tree height + 2
    bool assume_ctf_conjecture = false;
};

// Derive tri-valued verdicts for the surgery described by `q`, with one trace
// per written value.  Pure and deterministic; throws InconsistencyError if
// two rules derive contradictory values (a modeling bug or inconsistent
// declared data), Error on invalid queries.
Verdict classify(const Query& q);

// classify applied pointwise, in input order.  When the slope list contains
// slopes with |p| in {1,2}, additionally checks that the set of slopes
// verdicted not-LO fits one of the admissible small-p exceptional shapes and
// throws InconsistencyError if it does not.
std::vector<std::pair<Slope, Verdict>> scan(const KnotPtr& knot, const std::vector<Slope>& slopes,
                                            int depth_budget = -1,
                                            bool assume_ctf_conjecture = false);

struct RuleInfo {
    const char* id;
    const char* citation;
    const char* summary;
};

// The fixed rule catalog, in evaluation order.  Trace rule ids and citation
// keys always come from this table (see docs/rules.md).
const std::vector<RuleInfo>& rule_catalog();

}  // namespace dehn
