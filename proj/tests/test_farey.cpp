#include <doctest.h>
#include <numeric>

#include "dehn/farey.hpp"
#include "support/farey_bfs_oracle.hpp"

using namespace dehn;

TEST_CASE("adjacency") {
    for (long n = -9; n <= 9; ++n) {
        if (n == 0) continue;
        CHECK(farey_adjacent(Slope::longitude(), Slope(1, n)));
    }
    CHECK(!farey_adjacent(Slope(3, 5), Slope(3, 5)));
    CHECK(farey_adjacent(Slope::meridian(), Slope(5, 1)));  // |1*1 - 5*0| = 1
}

TEST_CASE("distance examples") {
    CHECK(fg_distance(Slope::longitude(), Slope::longitude()) == 0);
    CHECK(fg_distance(Slope::longitude(), Slope(5, 2)) == 3);
    CHECK(fg_distance(Slope::longitude(), Slope::meridian()) == 1);
    // d(0, p/(np +- 1)) <= 2
    for (long p = -12; p <= 12; ++p)
        for (long n = -6; n <= 6; ++n) {
            for (long eps : {1L, -1L}) {
                long q = n * p + eps;
                if (q == 0) continue;
                if (p == 0 && q == 0) continue;
                CHECK(fg_distance(Slope::longitude(), Slope(p, q)) <= 2);
            }
        }
}

TEST_CASE("distance agrees with the BFS oracle (unit-sized bound)") {
    dehn_test::FareyOracle oracle(12);
    const auto& verts = oracle.vertices();
    for (size_t i = 0; i < verts.size(); ++i) {
        auto dist = oracle.distances_from(static_cast<int>(i));
        for (size_t j = 0; j < verts.size(); ++j) {
            REQUIRE(dist[j] >= 0);
            CHECK(fg_distance(verts[i], verts[j]) == dist[j]);
        }
    }
}

TEST_CASE("metric properties on |p|,q <= 20") {
    std::vector<Slope> verts;
    for (long q = 1; q <= 20; ++q)
        for (long p = -20; p <= 20; ++p)
            if (std::gcd(std::abs(p), q) == 1) verts.push_back(Slope(p, q));
    verts.push_back(Slope::meridian());
    size_t n = verts.size();
    std::vector<std::vector<int>> d(n, std::vector<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) d[i][j] = static_cast<int>(fg_distance(verts[i], verts[j]));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            CHECK(d[i][j] == d[j][i]);
            CHECK((d[i][j] == 0) == (i == j));
            CHECK((d[i][j] == 1) == farey_adjacent(verts[i], verts[j]));
        }
    // triangle inequality
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (d[i][j] > d[i][k] + d[k][j]) {
                    REQUIRE(false);
                }
}

TEST_CASE("ball membership closed forms") {
    // B1 = {0} u {1/n}; B2 = {p/(np +- 1)}
    for (long q = 1; q <= 50; ++q) {
        for (long p = -60; p <= 60; ++p) {
            if (std::gcd(std::abs(p), q) != 1) continue;
            Slope s(p, q);
            bool b1 = p == 0 || std::abs(p) == 1;
            bool b2 = p == 0 || std::abs(p) == 1 || q % std::abs(p) == 1 ||
                      q % std::abs(p) == std::abs(p) - 1;
            CHECK(ball_membership(s, 1) == b1);
            CHECK(ball_membership(s, 2) == b2);
        }
    }
    CHECK(ball_membership(Slope(1, 7), 1));
    CHECK(ball_membership(Slope::longitude(), 0));
    CHECK(!ball_membership(Slope(5, 2), 2));
}

TEST_CASE("ball enumeration") {
    auto b1 = ball_enumerate(1, 3);
    std::vector<Slope> expect = {Slope(-1, 1), Slope(-1, 2), Slope(-1, 3), Slope(0, 1),
                                 Slope(1, 3),  Slope(1, 2),  Slope(1, 1),  Slope::meridian()};
    std::sort(expect.begin(), expect.end());
    CHECK(b1 == expect);

    CHECK(ball_enumerate(0, 10) == std::vector<Slope>{Slope::longitude()});

    // k = 2, bound = 5: exactly the reduced p/q with q = +-1 (mod p)
    auto b2 = ball_enumerate(2, 5);
    for (long q = 1; q <= 5; ++q)
        for (long p = -5; p <= 5; ++p) {
            if (std::gcd(std::abs(p), q) != 1) continue;
            bool in_b2 = p == 0 || std::abs(p) == 1 || q % std::abs(p) == 1 ||
                         q % std::abs(p) == std::abs(p) - 1;
            bool listed = std::find(b2.begin(), b2.end(), Slope(p, q)) != b2.end();
            CHECK(listed == in_b2);
        }
    CHECK(std::find(b2.begin(), b2.end(), Slope::meridian()) != b2.end());
    // serialization order: ascending rational value, meridian last
    CHECK(std::is_sorted(b2.begin(), b2.end()));
    CHECK(b2.back() == Slope::meridian());
}
