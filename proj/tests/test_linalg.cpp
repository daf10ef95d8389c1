#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "glulib/linalg.hpp"

using namespace glulib;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int64>>& rows) {
    IntMatrix m = IntMatrix::zero(static_cast<int>(rows.size()),
                                  rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    return m;
}

} // namespace

TEST_CASE("rank of simple matrices") {
    auto id3 = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(rank_exact(id3) == 3);
    CHECK(rank_mod_p(id3, 2) == 3);
    CHECK(rank_mod_p(id3, 32003) == 3);

    auto ones = from_rows({{1, 1}, {1, 1}});
    CHECK(rank_exact(ones) == 1);
    CHECK(rank_mod_p(ones, 2) == 1);

    auto zero = IntMatrix::zero(3, 4);
    CHECK(rank_exact(zero) == 0);
    CHECK(rank_mod_p(zero, 7) == 0);

    IntMatrix empty = IntMatrix::zero(0, 5);
    CHECK(rank_exact(empty) == 0);
    CHECK(rank_mod_p(empty, 2) == 0);
}

TEST_CASE("rank depends on characteristic") {
    // determinant 2: drops rank over GF(2) only
    auto m = from_rows({{1, 1}, {-1, 1}});
    CHECK(rank_exact(m) == 2);
    CHECK(rank_mod_p(m, 2) == 1);
    CHECK(rank_mod_p(m, 3) == 2);
    CHECK(rank_mod_p(m, 32003) == 2);
    CHECK(rank_over_field(m, 0) == 2);
    CHECK(rank_over_field(m, 2) == 1);
}

TEST_CASE("negative entries reduce correctly mod p") {
    auto m = from_rows({{-2, 4}, {3, -6}});
    // second row is -3/2 times the first
    CHECK(rank_exact(m) == 1);
    CHECK(rank_mod_p(m, 5) == 1);
    CHECK(rank_mod_p(m, 32003) == 1);
}

TEST_CASE("mod-p rank never exceeds exact rank") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int64> d(-4, 4);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m = IntMatrix::zero(dim(rng), dim(rng));
        for (auto& x : m.a)
            x = d(rng);
        int exact = rank_exact(m);
        CHECK(exact <= std::min(m.rows, m.cols));
        for (int64 p : {2, 3, 32003}) {
            int rp = rank_mod_p(m, p);
            CHECK(rp <= exact);
        }
        // rank is invariant under transpose
        IntMatrix t = IntMatrix::zero(m.cols, m.rows);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c)
                t.at(c, r) = m.at(r, c);
        CHECK(rank_exact(t) == exact);
    }
}

TEST_CASE("rank of a known homology-style boundary matrix") {
    // boundary of the triangle: edges {12,13,23} over vertices {1,2,3}
    auto d1 = from_rows({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
    CHECK(rank_exact(d1) == 2);
    CHECK(rank_mod_p(d1, 2) == 2);
}

TEST_CASE("primality check") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(32003));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(!is_prime(32001)); // 3 * 10667
    CHECK(!is_prime(1 << 16));
}
