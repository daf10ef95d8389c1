#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "glulib/arith.hpp"

using namespace glulib;

TEST_CASE("membership of <3,5>") {
    SemigroupGens S({3, 5});
    // gaps are exactly 1,2,4,7
    std::vector<int64> in = {0, 3, 5, 6, 8, 9, 10, 11, 12, 100};
    std::vector<int64> outv = {1, 2, 4, 7};
    for (int64 x : in)
        CHECK(S.contains(x));
    for (int64 x : outv)
        CHECK(!S.contains(x));
    CHECK(frobenius(S) == 7);
    CHECK(gaps(S) == std::vector<int64>{1, 2, 4, 7});
}

TEST_CASE("whole N as a semigroup") {
    SemigroupGens N({1});
    CHECK(frobenius(N) == -1);
    CHECK(pseudo_frobenius(N) == std::vector<int64>{-1});
    CHECK(gaps(N).empty());
    CHECK(N.contains(0));
    CHECK(N.contains(12345));
}

TEST_CASE("mcnugget frobenius") {
    SemigroupGens S({6, 9, 20});
    CHECK(frobenius(S) == 43);
    CHECK(S.minimal());
}

TEST_CASE("constructor normalizes and flags minimality") {
    SemigroupGens S({20, 6, 9, 26}); // 26 = 6 + 20
    CHECK(S.gens() == std::vector<int64>{6, 9, 20, 26});
    CHECK(!S.minimal());
    CHECK(minimal_generators({20, 6, 9, 26}) == std::vector<int64>{6, 9, 20});

    SemigroupGens T({4, 6});
    CHECK(T.gcd() == 2);
    CHECK_THROWS_AS(frobenius(T), std::domain_error);
    CHECK_THROWS_AS(gaps(T), std::domain_error);

    // duplicates are merged, not rejected
    CHECK(SemigroupGens({3, 3, 5}).gens() == std::vector<int64>{3, 5});
}

TEST_CASE("constructor rejects garbage") {
    CHECK_THROWS_AS(SemigroupGens({}), std::invalid_argument);
    CHECK_THROWS_AS(SemigroupGens({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(SemigroupGens({-2, 3}), std::invalid_argument);
}

TEST_CASE("apery set definition holds on random semigroups") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int64> d(2, 40);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int64> g = {d(rng), d(rng), d(rng)};
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        SemigroupGens S(minimal_generators(g));
        if (S.gcd() != 1)
            continue;
        int64 m = S.gens()[0];
        auto ap = apery_set(S, m);
        REQUIRE(static_cast<int64>(ap.size()) == m);
        for (int64 r = 0; r < m; ++r) {
            CHECK(ap[static_cast<size_t>(r)] % m == r);
            CHECK(S.contains(ap[static_cast<size_t>(r)]));
            if (ap[static_cast<size_t>(r)] >= m)
                CHECK(!S.contains(ap[static_cast<size_t>(r)] - m));
        }
        // frobenius = max(apery) - m
        int64 mx = *std::max_element(ap.begin(), ap.end());
        CHECK(frobenius(S) == mx - m);
    }
}

TEST_CASE("pseudo-frobenius against brute force") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int64> d(3, 35);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int64> g = {d(rng), d(rng), d(rng), d(rng)};
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        SemigroupGens S(minimal_generators(g));
        if (S.gcd() != 1)
            continue;
        int64 f = frobenius(S);
        std::vector<int64> expected;
        for (int64 x = (f >= 0 ? 0 : -1); x <= f; ++x) {
            if (x >= 0 && S.contains(x))
                continue;
            bool pf = true;
            for (int64 s : S.gens())
                if (x + s >= 0 && !S.contains(x + s)) {
                    pf = false;
                    break;
                }
            if (pf)
                expected.push_back(x);
        }
        CHECK(pseudo_frobenius(S) == expected);
    }
}

TEST_CASE("pseudo-frobenius knowns") {
    // <3,5> has pf = {7}: symmetric, type 1
    CHECK(pseudo_frobenius(SemigroupGens({3, 5})) == std::vector<int64>{7});
    // <3,4,5> has pf = {1,2}: type 2
    CHECK(pseudo_frobenius(SemigroupGens({3, 4, 5})) == std::vector<int64>{1, 2});
}

TEST_CASE("membership snapshot agrees with contains") {
    SemigroupGens S({7, 11, 13});
    auto snap = S.membership(200);
    REQUIRE(snap->size() >= 201);
    for (int64 x = 0; x <= 200; ++x)
        CHECK(((*snap)[static_cast<size_t>(x)] != 0) == S.contains(x));
}

TEST_CASE("checked arithmetic") {
    CHECK(mul_checked(1000000, 1000000) == 1000000000000LL);
    CHECK_THROWS_AS(mul_checked(int64(1) << 62, 4), resource_error);
    CHECK_THROWS_AS(add_checked(std::numeric_limits<int64>::max(), 1), resource_error);
    CHECK(gcd64(12, 18) == 6);
    CHECK(gcd64(0, 5) == 5);
    CHECK(gcd64(17, 28) == 1);
}
