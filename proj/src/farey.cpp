#include "dehn/farey.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace dehn {

namespace {

using boost::multiprecision::abs;

// Distance from p/q to 1/0, for reduced (p,q) with q >= 0.  Depends only on
// p mod q (translation is an automorphism fixing 1/0), so states are
// normalized before memoization.  The cache persists across calls; entries
// are tiny and shared heavily by the ball/oracle tests.
long dist_to_meridian(Int p, Int q) {
    if (q == 0) return 0;
    if (q == 1) return 1;
    thread_local std::map<std::pair<Int, Int>, long> memo;

    struct Rec {
        std::map<std::pair<Int, Int>, long>& memo;
        long run(Int p, Int q) {
            if (q == 1) return 1;
            Int r = p % q;
            if (r < 0) r += q;
            auto key = std::make_pair(r, q);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            // Step from 1/0 to floor(p/q) or ceil(p/q); the remainder of the
            // geodesic is measured after moving that integer to 1/0.
            long lo = run(q, r);
            long hi = run(q, q - r);
            long d = 1 + (lo < hi ? lo : hi);
            memo.emplace(key, d);
            return d;
        }
    };
    return Rec{memo}.run(std::move(p), std::move(q));
}

// Extended gcd: returns (g, x, y) with a*x + b*y = g.
void egcd(Int a, Int b, Int& g, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int t = a / b;
        Int r = a - t * b;
        a = b;
        b = r;
        Int nx = x0 - t * x1, ny = y0 - t * y1;
        x0 = x1;
        y0 = y1;
        x1 = nx;
        y1 = ny;
    }
    g = a;
    x = x0;
    y = y0;
}

}  // namespace

long fg_distance(const Slope& a, const Slope& b) {
    if (a == b) return 0;
    if (distance(a, b) == 1) return 1;
    // Unimodular M with M*(pb,qb) = (1,0): rows (s,-r) and (-qb,pb) where
    // s*pb - r*qb = 1.  Distances are preserved since |det M| = 1.
    Int g, s, mr;
    egcd(b.num(), b.den(), g, s, mr);  // s*pb + mr*qb = 1, so r = -mr
    Int r = -mr;
    Int np = s * a.num() - r * a.den();
    Int nq = b.num() * a.den() - b.den() * a.num();
    if (nq < 0) {
        np = -np;
        nq = -nq;
    }
    return dist_to_meridian(std::move(np), std::move(nq));
}

bool ball_membership(const Slope& r, long k) {
    return fg_distance(Slope::longitude(), r) <= k;
}

std::vector<Slope> ball_enumerate(long k, long bound) {
    std::vector<Slope> out;
    for (long q = 1; q <= bound; ++q) {
        for (long p = -bound; p <= bound; ++p) {
            if (boost::multiprecision::gcd(Int(p < 0 ? -p : p), Int(q)) != 1) continue;
            Slope s{Int(p), Int(q)};
            if (ball_membership(s, k)) out.push_back(s);
        }
    }
    if (k >= 1) out.push_back(Slope::meridian());
    // already generated in rational order per q; sort globally
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dehn
