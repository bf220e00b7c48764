#pragma once

// Deterministic random knots and slopes for fuzzing, round-trip corpora and
// the monotonicity pairs.  Generated attribute sets are consistent by
// construction so that validate() accepts them.

#include <numeric>
#include <random>
#include <vector>

#include "dehn/knot.hpp"

namespace dehn_test {

using dehn::DegeneracyLocus;
using dehn::FdtcSign;
using dehn::HypAttrs;
using dehn::Int;
using dehn::KnotExpr;
using dehn::KnotPtr;
using dehn::LSpaceKnotSign;
using dehn::ObbTriple;
using dehn::PatternAttrs;
using dehn::Slope;

class Gen {
public:
    explicit Gen(uint64_t seed) : rng_(seed) {}

    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool chance(int percent) { return pick(1, 100) <= percent; }

    Slope slope(long pmax = 40, long qmax = 12) {
        while (true) {
            long p = pick(-pmax, pmax);
            long q = pick(1, qmax);
            if (p == 0 && q == 0) continue;
            return Slope(p, q);
        }
    }

    KnotPtr torus_atom() {
        static const long ms[] = {2, 3, 4, 5};
        while (true) {
            long m = ms[pick(0, 3)];
            long n = pick(2, 9) * (chance(50) ? 1 : -1);
            if (std::gcd(m, std::abs(n)) == 1) return KnotExpr::torus(m, n);
        }
    }

    KnotPtr hyp_atom() {
        HypAttrs h;
        if (chance(15)) h.l_space_knot = chance(50) ? LSpaceKnotSign::Positive : LSpaceKnotSign::Negative;
        bool plsk = h.l_space_knot != LSpaceKnotSign::Unset;
        if (chance(50)) h.genus = Int(plsk ? pick(3, 6) : pick(1, 5));
        if (!plsk) {
            if (chance(40)) h.fibred = true;
            else if (chance(15)) h.fibred = false;
            if (h.fibred && *h.fibred && chance(60)) {
                int r = static_cast<int>(pick(0, 2));
                h.fdtc = r == 0 ? FdtcSign::Positive : r == 1 ? FdtcSign::Negative : FdtcSign::Zero;
            }
            if (chance(10) && !(h.fibred && !*h.fibred)) h.persistently_foliar = true;
        }
        if (chance(15)) h.alternating = true;
        if (chance(30)) {
            DegeneracyLocus d;
            d.form = chance(50) ? DegeneracyLocus::Form::BMu : DegeneracyLocus::Form::BMuPlusLambda;
            d.b = Int(pick(1, 4) * (chance(50) ? 1 : -1));
            h.degeneracy_locus = d;
        }
        if (chance(10)) h.non_lo_branched_cover = true;
        return KnotExpr::hyp_atom(std::move(h));
    }

    KnotPtr atom() { return chance(50) ? torus_atom() : hyp_atom(); }

    KnotPtr knot(int depth) {
        if (depth <= 0) return atom();
        switch (pick(0, 9)) {
            case 0:
            case 1:
            case 2:
                return atom();
            case 3:
            case 4: {  // cable
                while (true) {
                    long m = pick(2, 4);
                    long n = pick(1, 9) * (chance(50) ? 1 : -1);
                    if (std::gcd(m, std::abs(n)) != 1) continue;
                    return KnotExpr::cable(m, n, knot(depth - 1));
                }
            }
            case 5:
            case 6:
            case 7: {  // satellite
                PatternAttrs p;
                static const long ws[] = {0, 1, 1, 2, 3, 5, 6};
                p.winding = ws[pick(0, 6)];
                if (p.winding >= 1 && chance(30)) p.braided = true;
                if (p.winding >= 3 && chance(30)) {
                    ObbTriple o;
                    o.w = p.winding;
                    o.b = pick(1, static_cast<long>(o.w) - 2);
                    o.t = pick(1, static_cast<long>(o.w) - 2);
                    if (chance(30)) {  // mirrored braid
                        o.b = -o.b;
                        o.t = -o.t;
                    }
                    p.one_bridge_braid = o;
                }
                bool atoroidal = chance(30);
                if (atoroidal) p.exterior_atoroidal = true;
                if (p.winding != 1) {
                    if (chance(15) && !(p.winding == 0 && atoroidal)) p.cabled = true;
                    else if (chance(30)) p.cabled = false;
                }
                if (chance(25)) {
                    p.pattern_closure = chance(30) ? KnotExpr::unknot() : atom();
                    auto g = dehn::genus(p.pattern_closure);
                    if (g && chance(50)) p.closure_genus = *g;
                } else if (chance(20)) {
                    p.closure_genus = Int(pick(0, 4));
                }
                return KnotExpr::satellite(std::move(p), knot(depth - 1));
            }
            default: {  // connected sum
                std::vector<KnotPtr> parts;
                int n = static_cast<int>(pick(2, 3));
                for (int i = 0; i < n; ++i) parts.push_back(knot(depth - 1));
                return KnotExpr::sum(std::move(parts));
            }
        }
    }

    KnotPtr validated_knot(int depth) { return dehn::validate(knot(depth)); }

    // Adds declarations to a validated tree without removing or changing any;
    // the result refines the input, so verdicts may only gain information.
    KnotPtr enrich(const KnotPtr& k) {
        switch (k->kind) {
            case KnotExpr::Kind::Hyp: {
                HypAttrs h = k->hyp;
                bool plsk = h.l_space_knot != LSpaceKnotSign::Unset;
                if (!h.genus && chance(60)) h.genus = Int(plsk ? pick(3, 6) : pick(1, 5));
                if (!h.fibred && chance(50)) h.fibred = true;
                if (!h.degeneracy_locus && chance(50)) {
                    DegeneracyLocus d;
                    d.form = chance(50) ? DegeneracyLocus::Form::BMu
                                        : DegeneracyLocus::Form::BMuPlusLambda;
                    d.b = Int(pick(1, 4) * (chance(50) ? 1 : -1));
                    h.degeneracy_locus = d;
                }
                if (!h.alternating && chance(30)) h.alternating = true;
                if (!h.persistently_foliar && !plsk && chance(20) &&
                    !(h.fibred && !*h.fibred))
                    h.persistently_foliar = true;
                return KnotExpr::hyp_atom(std::move(h), k->name);
            }
            case KnotExpr::Kind::Cable:
                return KnotExpr::cable(k->m, k->n, enrich(k->companion));
            case KnotExpr::Kind::Satellite: {
                PatternAttrs p = k->pattern;
                bool cabled_true = p.cabled && *p.cabled;
                if (!p.exterior_atoroidal && !cabled_true && chance(40))
                    p.exterior_atoroidal = true;
                if (!p.cabled && chance(40)) p.cabled = false;
                if (!p.closure_genus && p.pattern_closure) {
                    auto g = dehn::genus(p.pattern_closure);
                    if (g) p.closure_genus = *g;
                }
                return KnotExpr::satellite(std::move(p), enrich(k->companion));
            }
            case KnotExpr::Kind::Sum: {
                std::vector<KnotPtr> parts;
                for (const auto& s : k->summands) parts.push_back(enrich(s));
                return KnotExpr::sum(std::move(parts));
            }
            default:
                return k;
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace dehn_test
