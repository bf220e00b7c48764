#pragma once

#include <vector>

#include "dehn/slope.hpp"

namespace dehn {

// Farey graph combinatorics on Q u {1/0}: an edge joins r, r' exactly when
// distance(r, r') = 1.

inline bool farey_adjacent(const Slope& a, const Slope& b) {
    return distance(a, b) == 1;
}

// Length of a shortest path in the Farey graph.
//
// One endpoint is moved to 1/0 by a unimodular change of basis (a graph
// automorphism), then the distance to 1/0 is computed by descending the
// continued-fraction expansion: a geodesic from 1/0 to x may be assumed to
// pass through one of the two integers bracketing x, since the edges from
// those integers to 1/0 separate x from every other integer in the (planar)
// Farey tessellation.  D(p/q) = 1 + min(D(q/r), D(q/(r-q))) with r = p mod q.
long fg_distance(const Slope& a, const Slope& b);

// d_FG(0/1, r) <= k.
bool ball_membership(const Slope& r, long k);

// All slopes with |numerator| <= bound and denominator <= bound at Farey
// distance <= k from 0/1, plus 1/0 when k >= 1 (the ball itself is infinite
// for k >= 1; the bound applies to both entries).  Sorted by rational value,
// 1/0 last.
std::vector<Slope> ball_enumerate(long k, long bound);

}  // namespace dehn
