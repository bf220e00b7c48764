#include <doctest.h>
#include <numeric>

#include "dehn/knot.hpp"
#include "support/generators.hpp"

using namespace dehn;

namespace {

KnotPtr trefoil() { return validate(KnotExpr::torus(2, 3)); }

KnotPtr hyp_with(HypAttrs h) { return validate(KnotExpr::hyp_atom(std::move(h))); }

}  // namespace

TEST_CASE("validate accepts and normalizes") {
    CHECK(validate(KnotExpr::torus(2, 3))->kind == KnotExpr::Kind::Torus);
    // both-negative parameters normalize to the same knot
    CHECK(equal(validate(KnotExpr::torus(-2, -3)), trefoil()));
    // connected sums flatten and sort
    auto s = validate(KnotExpr::sum({KnotExpr::torus(2, 5),
                                     KnotExpr::sum({KnotExpr::torus(2, 3), KnotExpr::torus(2, 7)})}));
    CHECK(s->summands.size() == 3);
    CHECK(to_dsl(s) == "Sum(T(2,3), T(2,5), T(2,7))");
}

TEST_CASE("validate rejects invalid structure") {
    CHECK_THROWS_AS(validate(KnotExpr::torus(1, 5)), ValidationError);
    CHECK_THROWS_AS(validate(KnotExpr::torus(2, 4)), ValidationError);
    CHECK_THROWS_AS(validate(KnotExpr::cable(2, 1, KnotExpr::unknot())), ValidationError);
    CHECK_THROWS_AS(validate(KnotExpr::cable(1, 2, trefoil())), ValidationError);
    CHECK_THROWS_AS(validate(KnotExpr::cable(2, 4, trefoil())), ValidationError);
    PatternAttrs p;
    p.winding = 2;
    CHECK_THROWS_AS(validate(KnotExpr::satellite(p, KnotExpr::unknot())), ValidationError);
    CHECK_THROWS_AS(validate(KnotExpr::sum({trefoil()})), ValidationError);
    CHECK_THROWS_AS(validate(KnotExpr::sum({trefoil(), KnotExpr::unknot()})), ValidationError);
}

TEST_CASE("validate error codes name the violated invariant") {
    try {
        validate(KnotExpr::torus(2, 4));
        REQUIRE(false);
    } catch (const ValidationError& e) {
        CHECK(e.code == ValidationError::Code::InvalidTorusParams);
    }
    try {
        validate(KnotExpr::cable(2, 1, KnotExpr::unknot()));
        REQUIRE(false);
    } catch (const ValidationError& e) {
        CHECK(e.code == ValidationError::Code::TrivialCompanion);
    }
    // one-bridge triple (3,1,1) plus a solid-torus surgery claim: the claim
    // forces winding number >= 4
    try {
        PatternAttrs p;
        p.winding = 3;
        p.one_bridge_braid = ObbTriple{3, 1, 1};
        p.solid_torus_surgery = true;
        validate(KnotExpr::satellite(p, trefoil()));
        REQUIRE(false);
    } catch (const ValidationError& e) {
        CHECK(e.code == ValidationError::Code::InconsistentAttrs);
    }
}

TEST_CASE("attribute implication closure") {
    HypAttrs h;
    h.l_space_knot = LSpaceKnotSign::Positive;
    auto k = hyp_with(h);
    CHECK(*k->hyp.fibred == true);
    CHECK(k->hyp.fdtc == FdtcSign::Positive);

    HypAttrs bad;
    bad.l_space_knot = LSpaceKnotSign::Positive;
    bad.fdtc = FdtcSign::Negative;
    CHECK_THROWS_AS(hyp_with(bad), ValidationError);

    HypAttrs pf_lspace;
    pf_lspace.persistently_foliar = true;
    pf_lspace.l_space_knot = LSpaceKnotSign::Positive;
    CHECK_THROWS_AS(hyp_with(pf_lspace), ValidationError);
}

TEST_CASE("validate is idempotent") {
    dehn_test::Gen gen(11);
    for (int i = 0; i < 300; ++i) {
        KnotPtr k = gen.validated_knot(3);
        CHECK(equal(validate(k), k));
    }
}

TEST_CASE("genus closed forms") {
    CHECK(*genus(KnotExpr::unknot()) == 0);
    CHECK(*genus(validate(KnotExpr::torus(3, 5))) == 4);
    // cable of the trefoil: g = (n+3)/2 for odd n >= 3
    for (long n = 3; n <= 19; n += 2) {
        if (std::gcd(2L, n) != 1) continue;
        auto c = validate(KnotExpr::cable(2, n, trefoil()));
        CHECK(*genus(c) == (n + 3) / 2);
    }
    // satellite via declared closure genus
    PatternAttrs p;
    p.winding = 3;
    p.closure_genus = 2;
    HypAttrs h;
    h.genus = 4;
    auto sat = validate(KnotExpr::satellite(p, KnotExpr::hyp_atom(h)));
    CHECK(*genus(sat) == 2 + 3 * 4);
    // absent inputs give absent results
    PatternAttrs p2;
    p2.winding = 3;
    CHECK(!genus(validate(KnotExpr::satellite(p2, KnotExpr::hyp_atom(HypAttrs{})))).has_value());
}

TEST_CASE("cable genus identity: 2g - 1 = mn - (m + n - 2m g0)") {
    for (long m = 2; m <= 9; ++m)
        for (long n = 3; n <= 19; n += 2) {
            if (std::gcd(m, n) != 1) continue;
            for (long g0 = 1; g0 <= 6; ++g0) {
                HypAttrs h;
                h.genus = g0;
                auto c = validate(KnotExpr::cable(m, n, KnotExpr::hyp_atom(h)));
                Int g = *genus(c);
                CHECK(2 * g - 1 == Int(m) * n - (m + n - 2 * m * g0));
                // below-cabling-slope bound for L-space-style parameters
                if (n > m * (2 * g0 - 1)) CHECK(2 * g - 1 < Int(m) * n);
            }
        }
}

TEST_CASE("winding-squared genus bound on synthetic grids") {
    // closure genus one above the threshold forces w^2 < 2g - 1
    for (long w = 2; w <= 6; ++w)
        for (long g0 = 1; g0 <= 5; ++g0) {
            Int bound = Int(w) * (w - 1) * (2 * g0 - 1) - w;  // 2g(P(U)) - 1 must exceed this
            Int closure_genus = (bound + 1) / 2 + 1;          // smallest genus with 2g-1 > bound
            PatternAttrs p;
            p.winding = w;
            p.closure_genus = closure_genus;
            HypAttrs h;
            h.genus = g0;
            auto sat = validate(KnotExpr::satellite(p, KnotExpr::hyp_atom(h)));
            Int g = *genus(sat);
            CHECK(Int(w) * w < 2 * g - 1);
        }
}

TEST_CASE("genus additivity for sums") {
    dehn_test::Gen gen(5);
    for (int i = 0; i < 100; ++i) {
        auto a = gen.validated_knot(1);
        auto b = gen.validated_knot(1);
        auto s = validate(KnotExpr::sum({a, b}));
        auto ga = genus(a), gb = genus(b), gs = genus(s);
        if (ga && gb) {
            REQUIRE(gs.has_value());
            CHECK(*gs == *ga + *gb);
        }
    }
}

TEST_CASE("cabling slope") {
    CHECK(*cabling_slope(validate(KnotExpr::cable(2, 7, trefoil()))) == Slope(14, 1));
    CHECK(!cabling_slope(trefoil()).has_value());
    PatternAttrs w1;
    w1.winding = 1;
    CHECK(!cabling_slope(validate(KnotExpr::satellite(w1, hyp_with({})))).has_value());
}

TEST_CASE("jsj rooted interval") {
    auto sum = validate(KnotExpr::sum({trefoil(), validate(KnotExpr::torus(2, 5))}));
    CHECK(jsj_is_rooted_interval(sum) == Tri::No);
    CHECK(jsj_is_rooted_interval(validate(KnotExpr::cable(2, 3, validate(KnotExpr::torus(2, 5))))) ==
          Tri::Yes);
    PatternAttrs p;
    p.winding = 2;
    CHECK(jsj_is_rooted_interval(validate(KnotExpr::satellite(p, hyp_with({})))) == Tri::Unknown);
    PatternAttrs pa;
    pa.winding = 2;
    pa.exterior_atoroidal = true;
    CHECK(jsj_is_rooted_interval(validate(KnotExpr::satellite(pa, hyp_with({})))) == Tri::Yes);
    // a sum anywhere in the companion chain is decisive
    CHECK(jsj_is_rooted_interval(validate(KnotExpr::cable(2, 3, sum))) == Tri::No);
}

TEST_CASE("mirror is an involution and flips the right data") {
    CHECK(equal(mirror(trefoil()), validate(KnotExpr::torus(2, -3))));
    HypAttrs h;
    h.degeneracy_locus = DegeneracyLocus{DegeneracyLocus::Form::BMu, -2};
    auto k = hyp_with(h);
    CHECK(mirror(k)->hyp.degeneracy_locus->b == 2);

    dehn_test::Gen gen(23);
    for (int i = 0; i < 300; ++i) {
        KnotPtr x = gen.validated_knot(3);
        CHECK(equal(validate(mirror(validate(mirror(x)))), x));
    }
}

TEST_CASE("total winding") {
    auto c = validate(KnotExpr::cable(2, 3, trefoil()));
    CHECK(total_winding(c, 0) == 1);
    CHECK(total_winding(c, 1) == 2);
    PatternAttrs p;
    p.winding = 3;
    auto sat = validate(KnotExpr::satellite(p, validate(KnotExpr::cable(2, 5, trefoil()))));
    CHECK(total_winding(sat, 2) == 6);
    CHECK_THROWS_AS(total_winding(trefoil(), 1), DepthExceededError);
    // the summand boundary torus of a sum has winding one; past it the chain
    // is ambiguous
    auto s = validate(KnotExpr::sum({trefoil(), validate(KnotExpr::torus(2, 5))}));
    CHECK(total_winding(s, 1) == 1);
    CHECK_THROWS_AS(total_winding(s, 2), DepthExceededError);
}

TEST_CASE("derived attribute facts") {
    CHECK(derived_fibred(trefoil()) == Tri::Yes);
    CHECK(derived_fdtc(trefoil()) == FdtcSign::Positive);
    CHECK(derived_fdtc(validate(KnotExpr::torus(2, -3))) == FdtcSign::Negative);
    CHECK(derived_positive_lspace(trefoil()) == Tri::Yes);
    CHECK(derived_positive_lspace(validate(KnotExpr::torus(2, -3))) == Tri::No);

    // Hom criterion for cables
    CHECK(derived_positive_lspace(validate(KnotExpr::cable(2, 3, trefoil()))) == Tri::Yes);
    CHECK(derived_positive_lspace(validate(KnotExpr::cable(2, 1, trefoil()))) == Tri::No);
    HypAttrs h;
    CHECK(derived_positive_lspace(validate(KnotExpr::cable(2, 3, KnotExpr::hyp_atom(h)))) ==
          Tri::Unknown);

    // sums: fibred iff all summands, persistently foliar if any summand
    HypAttrs pf;
    pf.persistently_foliar = true;
    auto sum = validate(KnotExpr::sum({hyp_with(pf), trefoil()}));
    CHECK(derived_persistently_foliar(sum) == Tri::Yes);
    CHECK(derived_fibred(sum) == Tri::Unknown);
    auto fsum = validate(KnotExpr::sum({trefoil(), validate(KnotExpr::torus(2, 5))}));
    CHECK(derived_fibred(fsum) == Tri::Yes);
    CHECK(derived_positive_lspace(fsum) == Tri::No);
}

TEST_CASE("cable status and plausible cabling slopes") {
    auto c = validate(KnotExpr::cable(2, 3, trefoil()));
    CHECK(cable_status(c).kind == CableStatus::Kind::CableKnown);
    CHECK(maybe_cabling_slope(c, Slope(6, 1)));
    CHECK(!maybe_cabling_slope(c, Slope(7, 1)));

    PatternAttrs w1;
    w1.winding = 1;
    CHECK(cable_status(validate(KnotExpr::satellite(w1, hyp_with({})))).kind ==
          CableStatus::Kind::NotCable);

    PatternAttrs w0;
    w0.winding = 0;
    auto s0 = validate(KnotExpr::satellite(w0, hyp_with({})));
    CHECK(cable_status(s0).kind == CableStatus::Kind::CableUnknown);
    CHECK(maybe_cabling_slope(s0, Slope(6, 1)));
    CHECK(!maybe_cabling_slope(s0, Slope(1, 1)));   // cabling slopes have |mn| >= 2
    CHECK(!maybe_cabling_slope(s0, Slope(5, 2)));   // and are integers

    PatternAttrs w4;
    w4.winding = 4;
    auto s4 = validate(KnotExpr::satellite(w4, hyp_with({})));
    CHECK(maybe_cabling_slope(s4, Slope(6, 1)));    // gcd(6,4) = 2
    CHECK(!maybe_cabling_slope(s4, Slope(9, 1)));   // gcd(9,4) = 1
}
