#include "dehn/slope.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace dehn {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

Slope::Slope(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == 0 && q_ == 0) throw ZeroPairError();
    Int g = gcd(abs(p_), abs(q_));
    if (g > 1) {
        p_ /= g;
        q_ /= g;
    }
    if (q_ < 0 || (q_ == 0 && p_ < 0)) {
        p_ = -p_;
        q_ = -q_;
    }
}

bool Slope::operator<(const Slope& o) const {
    int c = compare(*this, o);
    return c < 0;
}

std::string Slope::str() const {
    return p_.str() + "/" + q_.str();
}

std::optional<Slope> Slope::parse(std::string_view text) {
    auto read_int = [](std::string_view& s, Int& out) -> bool {
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start) return false;
        out = Int(std::string(s.substr(start, i - start)));
        if (neg) out = -out;
        s.remove_prefix(i);
        return true;
    };
    Int p, q = 1;
    if (!read_int(text, p)) return std::nullopt;
    if (!text.empty()) {
        if (text[0] != '/') return std::nullopt;
        text.remove_prefix(1);
        if (!read_int(text, q)) return std::nullopt;
    }
    if (!text.empty()) return std::nullopt;
    if (p == 0 && q == 0) return std::nullopt;
    return Slope(p, q);
}

int compare_rational(const Slope& s, const Int& a, const Int& b) {
    if (s.is_meridian()) return 1;
    Int lhs = s.num() * b;
    Int rhs = a * s.den();
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

Int distance(const Slope& a, const Slope& b) {
    return abs(a.num() * b.den() - b.num() * a.den());
}

Slope satellite_image(const Slope& r, const Int& w) {
    if (r.is_meridian()) throw MeridianInputError();
    if (w == 0) return Slope::meridian();
    return Slope(r.num(), r.den() * w * w);
}

bool HomologyClass::is_primitive() const {
    if (a == 0 && b == 0) return false;
    return gcd(abs(a), abs(b)) == 1;
}

HomologyClass longitude_class(const Int& p, const Int& q, const Int& w) {
    if (p == 0 && q == 0) throw ZeroPairError();
    if (w == 0) return HomologyClass{1, 0};  // the meridional class, for every p/q
    Int w2 = w * w;
    // gcd(p, w^2) is the content of (p, q*w^2) since gcd(p,q) = 1.
    Int g = gcd(abs(p), w2);
    Int a = p / g;
    Int b = q * w2 / g;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    return HomologyClass{a, b};
}

const char* to_string(ValidationError::Code c) {
    switch (c) {
        case ValidationError::Code::InvalidTorusParams: return "InvalidTorusParams";
        case ValidationError::Code::InvalidCableParams: return "InvalidCableParams";
        case ValidationError::Code::TrivialCompanion: return "TrivialCompanion";
        case ValidationError::Code::MalformedPattern: return "MalformedPattern";
        case ValidationError::Code::InconsistentAttrs: return "InconsistentAttrs";
    }
    return "?";
}

}  // namespace dehn
