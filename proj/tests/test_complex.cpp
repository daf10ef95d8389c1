#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "glulib/complex.hpp"
#include "glulib/oracle.hpp"

using namespace glulib;

namespace {

// Koszul complex on the defining binomials of a semigroup ring.
FreeComplex koszul_of(const SemigroupGens& S) {
    WeightedRing ring = make_ring(S.gens());
    std::vector<Poly> els;
    for (const auto& b : minimal_generators_of_ideal(S))
        els.push_back(binomial_to_poly(b));
    return koszul_complex(ring, els);
}

} // namespace

TEST_CASE("koszul complex of one element") {
    WeightedRing ring = make_ring({2, 3});
    // x^3 - y^2, the plane curve relation of <2,3>
    Poly f = Poly::monomial({3, 0}, 1) - Poly::monomial({0, 2}, 1);
    FreeComplex K = koszul_complex(ring, {f});
    CHECK(K.length() == 1);
    CHECK(K.rank(0) == 1);
    CHECK(K.rank(1) == 1);
    CHECK(K.shifts[1] == std::vector<int64>{6});
    ComplexReport rep = verify_complex(K);
    CHECK(rep.ok());
    CHECK(betti_from_complex(K).totals() == std::vector<int64>{1, 1});
}

TEST_CASE("koszul complex of a regular sequence of three") {
    SemigroupGens S({17, 22, 12, 32}); // complete intersection, mu = 3
    FreeComplex K = koszul_of(S);
    CHECK(K.length() == 3);
    CHECK(K.rank(0) == 1);
    CHECK(K.rank(1) == 3);
    CHECK(K.rank(2) == 3);
    CHECK(K.rank(3) == 1);
    ComplexReport rep = verify_complex(K);
    CHECK(rep.d2_ok);
    CHECK(rep.homogeneous_ok);
    CHECK(rep.minimal_ok);

    // graded data matches the homology oracle
    BettiTable from_complex = betti_from_complex(K);
    CHECK(from_complex == graded_betti_oracle(S));

    ExactnessReport er = verify_exactness_probabilistic(K);
    CHECK(er.certified);
    CHECK(!er.impossible);
}

TEST_CASE("koszul rejects bad input") {
    WeightedRing ring = make_ring({2, 3});
    CHECK_THROWS_AS(koszul_complex(ring, {Poly::zero()}), std::invalid_argument);
    // inhomogeneous element
    Poly g = Poly::monomial({1, 0}, 1) + Poly::monomial({0, 1}, 1);
    CHECK_THROWS_AS(koszul_complex(ring, {g}), std::invalid_argument);
}

TEST_CASE("three-generator resolution from the structure theorem") {
    SemigroupGens S({3, 4, 5});
    WeightedRing ring = make_ring(S.gens());
    auto gens = minimal_generators_of_ideal(S);
    REQUIRE(gens.size() == 3);
    FreeComplex F = herzog_resolution(ring, gens);
    CHECK(F.length() == 2);
    CHECK(F.rank(1) == 3);
    CHECK(F.rank(2) == 2);
    CHECK(verify_complex(F).ok());
    CHECK(betti_from_complex(F) == graded_betti_oracle(S));
    CHECK(verify_exactness_probabilistic(F).certified);
}

TEST_CASE("five-generator gorenstein resolution") {
    SemigroupGens S({5, 9, 13, 17});
    WeightedRing ring = make_ring(S.gens());
    auto gens = minimal_generators_of_ideal(S);
    REQUIRE(gens.size() == 5);
    auto shape = parse_bresinsky(gens);
    REQUIRE(shape.has_value());
    FreeComplex F = bresinsky_resolution(ring, *shape);
    CHECK(F.length() == 3);
    CHECK(F.rank(1) == 5);
    CHECK(F.rank(2) == 5);
    CHECK(F.rank(3) == 1);
    CHECK(verify_complex(F).ok());
    CHECK(betti_from_complex(F) == graded_betti_oracle(S));
    CHECK(verify_exactness_probabilistic(F).certified);
}

TEST_CASE("tensor product of koszul complexes is the joint koszul complex") {
    WeightedRing ring = make_ring({2, 3, 7});
    Poly f = Poly::monomial({3, 0, 0}, 1) - Poly::monomial({0, 2, 0}, 1); // degree 6
    Poly g = Poly::monomial({0, 0, 2}, 1) - Poly::monomial({7, 0, 0}, 1); // degree 14
    FreeComplex Kf = koszul_complex(ring, {f});
    FreeComplex Kg = koszul_complex(ring, {g});
    FreeComplex T = tensor_complex(Kf, Kg);
    FreeComplex K2 = koszul_complex(ring, {f, g});
    CHECK(T.length() == 2);
    CHECK(verify_complex(T).ok());
    CHECK(betti_from_complex(T) == betti_from_complex(K2));
    CHECK(verify_exactness_probabilistic(T).certified);
}

TEST_CASE("tensor positions tile the product ranks") {
    WeightedRing ring = make_ring({2, 3, 7});
    Poly f = Poly::monomial({3, 0, 0}, 1) - Poly::monomial({0, 2, 0}, 1);
    Poly g = Poly::monomial({0, 0, 2}, 1) - Poly::monomial({7, 0, 0}, 1);
    FreeComplex A = koszul_complex(ring, {f});
    FreeComplex B = koszul_complex(ring, {g});
    FreeComplex T = tensor_complex(A, B);
    for (int k = 0; k <= T.length(); ++k) {
        std::vector<bool> hit(static_cast<size_t>(T.rank(k)), false);
        for (int i = 0; i <= k; ++i)
            for (int a = 0; a < A.rank(i); ++a)
                for (int b = 0; b < B.rank(k - i); ++b) {
                    int pos = tensor_position(A, B, k, i, a, b);
                    REQUIRE(pos >= 0);
                    REQUIRE(pos < T.rank(k));
                    CHECK(!hit[static_cast<size_t>(pos)]);
                    hit[static_cast<size_t>(pos)] = true;
                }
        for (bool h : hit)
            CHECK(h);
    }
}

TEST_CASE("mapping cone doubles the ranks and shifts by the degree") {
    WeightedRing ring = make_ring({2, 3});
    Poly f = Poly::monomial({3, 0}, 1) - Poly::monomial({0, 2}, 1);
    FreeComplex K = koszul_complex(ring, {f});
    Poly rho = Poly::monomial({5, 0}, 1) - Poly::monomial({2, 2}, 1); // degree 10
    FreeComplex C = mapping_cone_mul(K, rho);
    CHECK(C.length() == 2);
    CHECK(C.rank(0) == 1);
    CHECK(C.rank(1) == 2); // K_1 + K_0 shifted
    CHECK(C.rank(2) == 1);
    CHECK(C.shifts[1] == std::vector<int64>{6, 10});
    CHECK(C.shifts[2] == std::vector<int64>{16});
    CHECK(verify_complex(C).ok());
}

TEST_CASE("import rescales weights and degrees consistently") {
    WeightedRing small = make_ring({2, 3});
    Poly f = Poly::monomial({3, 0}, 1) - Poly::monomial({0, 2}, 1);
    FreeComplex K = koszul_complex(small, {f});
    // target ring: variables of the 17-fold scaled semigroup plus extras
    WeightedRing big = make_ring({34, 51, 5});
    FreeComplex M = import_complex(K, big, 0, 17);
    CHECK(M.shifts[1] == std::vector<int64>{102});
    CHECK(verify_complex(M).ok());
    // wrong scale is rejected
    CHECK_THROWS_AS(import_complex(K, big, 0, 5), std::invalid_argument);
}

TEST_CASE("negative controls are caught") {
    SemigroupGens S({17, 22, 12, 32});
    FreeComplex K = koszul_of(S);

    SUBCASE("flipped sign breaks d2") {
        FreeComplex bad = K;
        PolyMatrix& d2 = bad.diffs[2];
        d2.at(0, 0) = -d2.at(0, 0);
        ComplexReport rep = verify_complex(bad);
        CHECK(!rep.d2_ok);
        CHECK(!rep.ok());
    }

    SUBCASE("injected unit breaks minimality") {
        FreeComplex bad = K;
        // make an entry of d1 a unit and fix the shift so degrees still match
        bad.diffs[1].at(0, 0) = Poly::constant(bad.ring.nvars(), 1);
        bad.shifts[1][0] = 0;
        ComplexReport rep = verify_complex(bad);
        CHECK(!rep.minimal_ok);
    }

    SUBCASE("duplicated last column cannot be exact") {
        FreeComplex bad = K;
        // append a copy of the final differential's column: rank bookkeeping
        // r_3 becomes 2 > rank F_3 available from the left
        PolyMatrix& d3 = bad.diffs[3];
        PolyMatrix wide = PolyMatrix::zero(d3.rows, d3.cols + 1);
        for (int r = 0; r < d3.rows; ++r)
            for (int c = 0; c < d3.cols; ++c)
                wide.at(r, c) = d3.at(r, c);
        for (int r = 0; r < d3.rows; ++r)
            wide.at(r, d3.cols) = d3.at(r, 0);
        bad.diffs[3] = wide;
        bad.shifts[3].push_back(bad.shifts[3][0]);
        ExactnessReport er = verify_exactness_probabilistic(bad);
        CHECK(!er.certified);
    }
}

TEST_CASE("exactness verdicts") {
    WeightedRing ring = make_ring({2, 3});
    Poly f = Poly::monomial({3, 0}, 1) - Poly::monomial({0, 2}, 1);
    FreeComplex K = koszul_complex(ring, {f});
    SUBCASE("non-prime modulus is rejected") {
        CHECK_THROWS_AS(verify_exactness_probabilistic(K, 32001), std::invalid_argument);
    }
    SUBCASE("several trials and a seed are accepted") {
        ExactnessReport er = verify_exactness_probabilistic(K, 32003, 5, 42);
        CHECK(er.certified);
        CHECK(er.trials >= 1);
    }
}

TEST_CASE("exports contain the structural markers") {
    SemigroupGens S({3, 4, 5});
    WeightedRing ring = make_ring(S.gens());
    FreeComplex F = herzog_resolution(ring, minimal_generators_of_ideal(S));

    std::string txt = export_text(F);
    CHECK(txt.find("complex") != std::string::npos);
    CHECK(txt.find("length 2") != std::string::npos);
    CHECK(txt.find("module 2:") != std::string::npos);

    std::string m2 = export_macaulay2(F);
    CHECK(m2.find("QQ[") != std::string::npos);
    CHECK(m2.find("isHomogeneous") != std::string::npos);
    CHECK(m2.find("Degrees =>") != std::string::npos);
    // deterministic output
    CHECK(export_text(F) == txt);
    CHECK(export_macaulay2(F) == m2);
}

TEST_CASE("minimal ideal generators match the divisor-complex betti count") {
    for (auto gens : {std::vector<int64>{3, 4, 5}, {5, 9, 13, 17}, {9, 11, 13, 15}}) {
        SemigroupGens S(gens);
        auto bins = minimal_generators_of_ideal(S);
        auto table = graded_betti_oracle(S);
        auto totals = table.totals();
        CHECK(static_cast<int64>(bins.size()) == (totals.size() > 1 ? totals[1] : 0));
        // degrees of the binomials match the first column of the table
        std::map<int64, int64> by_degree;
        for (const auto& b : bins)
            ++by_degree[b.degree];
        for (const auto& [deg, cnt] : by_degree)
            CHECK(table.entries.at({1, deg}) == cnt);
    }
}
