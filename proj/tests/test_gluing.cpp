#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "glulib/gluing.hpp"
#include "support/corpus.hpp"

using namespace glulib;

namespace {

const std::vector<int64> kEx1 = {187, 289, 425, 323, 140, 364, 336};

bool same_split(const GluingSplit& s, int64 k1, std::vector<int64> a, int64 k2,
                std::vector<int64> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return s.k1 == k1 && s.A.gens() == a && s.k2 == k2 && s.B.gens() == b;
}

} // namespace

TEST_CASE("seven-generator running example decomposes as 17A u 28B") {
    SemigroupGens C(kEx1);
    auto splits = find_gluings(C);
    bool found = false;
    for (const auto& s : splits)
        if (same_split(s, 17, {11, 17, 25, 19}, 28, {5, 13, 12}))
            found = true;
    REQUIRE(found);

    DecompTree tree = decomposition_tree(C, SplitStrategy::prefer_simple);
    REQUIRE(!tree.is_leaf());
    REQUIRE(tree.split.has_value());
    const GluingSplit& root = *tree.split;
    CHECK(same_split(root, 17, {11, 17, 25, 19}, 28, {5, 13, 12}));

    // rho of degree 17*28; alpha and beta are lex-smallest over the sorted
    // generators (11,17,19,25) and (5,12,13)
    Binomial rho = rho_binomial(root);
    CHECK(rho.left == std::vector<int64>{1, 1, 0, 0});  // 11 + 17 = 28 = k2
    CHECK(rho.right == std::vector<int64>{1, 1, 0});    // 5 + 12 = 17 = k1
    CHECK(rho.degree == 476);
}

TEST_CASE("smallest generator always lands on the B side") {
    SemigroupGens C(kEx1);
    for (const auto& s : find_gluings(C)) {
        auto p2 = s.part2();
        CHECK(std::find(p2.begin(), p2.end(), 140) != p2.end());
    }
}

TEST_CASE("dimension-2 semigroups are terminal") {
    SemigroupGens C({2, 3});
    CHECK(check_split(C, {2}, {3}) == std::nullopt);
    CHECK(find_gluings(C).empty());
    DecompTree t = decomposition_tree(C, SplitStrategy::prefer_simple);
    CHECK(t.leaf_kind == LeafKind::dim2);
    CHECK(t.children.empty());

    DecompTree t1 = decomposition_tree(SemigroupGens({1}), SplitStrategy::first);
    CHECK(t1.leaf_kind == LeafKind::dim1);
}

TEST_CASE("simple split of <4,6,9>") {
    // 4,6 = 2*{2,3} and 9 = 9*{1}: k1=2 in <1>, k2=9 in <2,3>
    SemigroupGens C({4, 6, 9});
    auto sp = check_split(C, {4, 6}, {9});
    REQUIRE(sp.has_value());
    CHECK(sp->k1 == 2);
    CHECK(sp->A.gens() == std::vector<int64>{2, 3});
    CHECK(sp->k2 == 9);
    CHECK(sp->B.gens() == std::vector<int64>{1});
    CHECK(sp->is_simple());

    auto simple = simple_splits(C);
    REQUIRE(!simple.empty());
    for (const auto& s : simple)
        CHECK(s.is_simple());

    DecompTree t = decomposition_tree(C, SplitStrategy::prefer_simple);
    REQUIRE(!t.is_leaf());
    CHECK(t.split->is_simple());
    REQUIRE(t.children.size() == 2);
}

TEST_CASE("gluing invariants hold for every split found on the corpus") {
    auto members = corpus::gluing_corpus(25, 0xA11CE);
    for (const auto& gens : members) {
        SemigroupGens C(gens);
        auto splits = find_gluings(C);
        REQUIRE(!splits.empty()); // constructed as gluings
        for (const auto& s : splits) {
            CAPTURE(gens);
            // parts partition the generators
            auto p1 = s.part1(), p2 = s.part2();
            std::vector<int64> merged = p1;
            merged.insert(merged.end(), p2.begin(), p2.end());
            std::sort(merged.begin(), merged.end());
            CHECK(merged == C.gens());

            // multiplier conditions
            CHECK(gcd64(s.k1, s.k2) == 1);
            CHECK(s.B.contains(s.k1));
            CHECK(!std::binary_search(s.B.gens().begin(), s.B.gens().end(), s.k1));
            CHECK(s.A.contains(s.k2));
            CHECK(!std::binary_search(s.A.gens().begin(), s.A.gens().end(), s.k2));

            // alpha, beta represent k2, k1
            int64 suma = 0, sumb = 0;
            REQUIRE(s.alpha.size() == s.A.gens().size());
            REQUIRE(s.beta.size() == s.B.gens().size());
            for (size_t i = 0; i < s.alpha.size(); ++i)
                suma += s.alpha[i] * s.A.gens()[i];
            for (size_t j = 0; j < s.beta.size(); ++j)
                sumb += s.beta[j] * s.B.gens()[j];
            CHECK(suma == s.k2);
            CHECK(sumb == s.k1);
            CHECK(rho_binomial(s).degree == s.k1 * s.k2);

            // swapping is an involution exchanging the parts
            GluingSplit w = s.swapped();
            CHECK(w.k1 == s.k2);
            CHECK(w.part1() == s.part2());
        }
    }
}

TEST_CASE("alpha is the lexicographically smallest representation") {
    // 10 in <2,3>: representations 2*5, 2*2+3*2, 2+... lex-smallest exponent
    // vector over (2,3) is (5,0): compare by scanning exponents left to right
    SemigroupGens C({4, 6, 9});
    auto sp = check_split(C, {4, 6}, {9});
    REQUIRE(sp.has_value());
    // k2 = 9 over A = <2,3>: candidates (0,3) and (3,1); lex-smallest is (0,3)
    CHECK(sp->alpha == std::vector<int64>{0, 3});
    // k1 = 2 over B = <1>: (2)
    CHECK(sp->beta == std::vector<int64>{2});
}

TEST_CASE("gluing search rejects non-minimal or non-coprime input") {
    CHECK_THROWS_AS(find_gluings(SemigroupGens({4, 6})), std::invalid_argument);
    CHECK_THROWS_AS(find_gluings(SemigroupGens({3, 5, 8})), std::invalid_argument);
    SemigroupGens C({4, 6, 9});
    CHECK_THROWS_AS(check_split(C, {4, 6, 9}, {}), std::invalid_argument);
    CHECK_THROWS_AS(check_split(C, {4, 6}, {5}), std::invalid_argument);
}

TEST_CASE("all decomposition trees enumerate and respect the cap") {
    SemigroupGens C(kEx1);
    auto trees = all_decomposition_trees(C, 8);
    CHECK(!trees.empty());
    CHECK(trees.size() <= 8);
    for (const auto& t : trees) {
        CHECK(t.node == C);
        if (!t.is_leaf())
            REQUIRE(t.children.size() == 2);
    }
}

TEST_CASE("strategies agree on decomposability") {
    auto members = corpus::gluing_corpus(10, 0xBEEF);
    for (const auto& gens : members) {
        SemigroupGens C(gens);
        DecompTree a = decomposition_tree(C, SplitStrategy::first);
        DecompTree b = decomposition_tree(C, SplitStrategy::prefer_simple);
        CHECK(!a.is_leaf());
        CHECK(!b.is_leaf());
    }
}
