#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "dehn/errors.hpp"

namespace dehn {

using Int = boost::multiprecision::cpp_int;

// A slope on a torus: a reduced projective pair p/q in Q u {1/0}, identified
// with its negation.  Canonical representative: q > 0, or (p,q) = (1,0) for
// the meridian.  The longitude is 0/1, the meridian 1/0.
class Slope {
public:
    Slope() : p_(0), q_(1) {}
    Slope(Int p, Int q);  // reduces and canonicalizes; throws ZeroPairError on (0,0)

    static Slope meridian() { return Slope(1, 0); }
    static Slope longitude() { return Slope(0, 1); }
    static Slope integer(Int n) { return Slope(std::move(n), 1); }

    const Int& num() const { return p_; }
    const Int& den() const { return q_; }

    bool is_meridian() const { return q_ == 0; }
    bool is_integer() const { return q_ == 1; }

    Slope negated() const { return is_meridian() ? *this : Slope(-p_, q_); }

    bool operator==(const Slope& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const Slope& o) const { return !(*this == o); }

    // Order by rational value with the meridian last (treated as +infinity).
    // Used for set storage and the serialized ordering of slope lists.
    bool operator<(const Slope& o) const;

    std::string str() const;  // always "p/q", e.g. "-3/2", "1/0"

    static std::optional<Slope> parse(std::string_view text);

private:
    Int p_, q_;
};

// Compare a rational slope with the rational a/b (b > 0).  Meridian counts as
// +infinity.  Returns <0, 0, >0.
int compare_rational(const Slope& s, const Int& a, const Int& b);
inline int compare(const Slope& s, const Slope& t) {
    if (s.is_meridian()) return t.is_meridian() ? 0 : 1;
    if (t.is_meridian()) return -1;
    return compare_rational(s, t.num(), t.den());
}

// Distance between two slopes: the absolute value of the algebraic
// intersection number |p_a q_b - p_b q_a|.  Zero iff equal, one iff the
// representatives form a basis of H_1(T).
Int distance(const Slope& a, const Slope& b);

// The slope on the companion boundary torus induced by filling a satellite
// with pattern winding number w along the rational slope r: 1/0 when w = 0,
// the reduced form of p/(q w^2) otherwise.  Throws MeridianInputError if r is
// the meridian.
Slope satellite_image(const Slope& r, const Int& w);

// An integer class a*mu0 + b*lambda0 on a companion boundary torus.  Unlike a
// Slope it need not be primitive; intermediate classes are kept exact.
struct HomologyClass {
    Int a, b;  // coefficients of mu0, lambda0

    bool operator==(const HomologyClass& o) const { return a == o.a && b == o.b; }

    bool is_primitive() const;

    // The slope this class represents (requires (a,b) != (0,0)).
    Slope as_slope() const { return Slope(a, b); }

    // Coordinates in the pattern basis (mu, lambda0) after substituting
    // mu0 = w*mu.  Exposed so the change-of-basis identity can be checked as
    // an exact integer statement.
    std::pair<Int, Int> in_pattern_basis(const Int& w) const { return {a * w, b}; }
};

// The longitudinal class of the filled pattern space: the primitive class
// (p*mu0 + q*w^2*lambda0) / gcd(p, w^2).  For w = 0 this is mu0.
// Requires gcd(p,q) = 1 and (p,q) != (0,0).
HomologyClass longitude_class(const Int& p, const Int& q, const Int& w);

// Coordinates of w*(p*mu + q*lambda) in the basis (mu, lambda0), using
// lambda = w*lambda0.  The counterpart of HomologyClass::in_pattern_basis for
// the filling class.
inline std::pair<Int, Int> filling_class_pattern_basis(const Int& p, const Int& q, const Int& w) {
    return {w * p, w * w * q};
}

}  // namespace dehn
