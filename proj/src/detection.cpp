#include "dehn/detection.hpp"

#include <algorithm>

namespace dehn {

namespace {

bool in_open_twist_interval(FdtcSign sign, const Slope& s) {
    // intervals are stated for slope 1 scaled to the knot's own boundary
    switch (sign) {
        case FdtcSign::Positive: return compare_rational(s, 1, 1) < 0;   // (-inf, 1)
        case FdtcSign::Negative: return compare_rational(s, -1, 1) > 0;  // (-1, inf)
        case FdtcSign::Zero: return true;                                // (-inf, inf)
        default: return false;
    }
}

}  // namespace

Detection strongly_ctf_detected(const KnotPtr& expr, const Slope& s) {
    if (s.is_meridian()) return {};
    if (derived_persistently_foliar(expr) == Tri::Yes)
        return {Tri::Yes, {"def:persistently-foliar"}};
    if (derived_fibred(expr) == Tri::Yes && in_open_twist_interval(derived_fdtc(expr), s))
        return {Tri::Yes, {"thm:roberts-interval"}};
    return {};
}

Detection detected(const KnotPtr& expr, const Slope& s, DetProp prop,
                   bool assume_ctf_conjecture, const SurgeryOracle* oracle) {
    Detection out;
    auto add = [&](const char* key) {
        out.value = Tri::Yes;
        out.provenance.push_back(key);
    };

    if (s == Slope::longitude()) add("prop:longitude-detected");

    if (distance(s, Slope::longitude()) == 1) {
        if (prop == DetProp::LO || prop == DetProp::NLS) {
            add("thm:distance-one-detection");
        } else if (derived_fibred(expr) == Tri::Yes) {
            add("thm:distance-one-detection");
        } else if (assume_ctf_conjecture) {
            add("conj:ctf-detection");
        }
    }

    if (prop == DetProp::CTF) {
        Detection strong = strongly_ctf_detected(expr, s);
        if (strong.value == Tri::Yes)
            for (const auto& key : strong.provenance) add(key.c_str());
    }

    if ((prop == DetProp::LO || prop == DetProp::NLS) && !s.is_meridian()) {
        if (expr->kind == KnotExpr::Kind::Hyp && prop == DetProp::LO) {
            const auto& lo = expr->hyp.known_lo_slopes;
            if (std::find(lo.begin(), lo.end(), s) != lo.end()) add("fact:declared-slope");
        }
        if (oracle && (*oracle)(expr, s, prop) == Tri::Yes) add("rem:filling-detects");
    }

    return out;
}

}  // namespace dehn
