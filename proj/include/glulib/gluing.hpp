#pragma once

#include <optional>
#include <vector>

#include "glulib/arith.hpp"

namespace glulib {

// x^left - x^right, both monomials of the same weighted degree. For a gluing
// binomial rho, left indexes the A-variables and right the B-variables and
// the degree is k1*k2 in the parent weighting. Oracle-produced generators use
// full-length exponent vectors on both sides instead.
struct Binomial {
    std::vector<int64> left;
    std::vector<int64> right;
    int64 degree = 0;

    bool operator==(const Binomial& o) const = default;
};

// C = k1*A disjoint-union k2*B with k1 in <B>\B, k2 in <A>\A, gcd(k1,k2)=1.
// alpha/beta are the pinned representations k2 = sum alpha_i a_i and
// k1 = sum beta_j b_j (lexicographically smallest exponent vectors).
struct GluingSplit {
    int64 k1 = 0;
    SemigroupGens A;
    std::vector<int64> alpha;
    int64 k2 = 0;
    SemigroupGens B;
    std::vector<int64> beta;

    GluingSplit(int64 k1_, SemigroupGens A_, std::vector<int64> alpha_, int64 k2_,
                SemigroupGens B_, std::vector<int64> beta_)
        : k1(k1_), A(std::move(A_)), alpha(std::move(alpha_)), k2(k2_), B(std::move(B_)),
          beta(std::move(beta_)) {}

    std::vector<int64> part1() const; // k1 * A.gens
    std::vector<int64> part2() const; // k2 * B.gens
    GluingSplit swapped() const { return GluingSplit(k2, B, beta, k1, A, alpha); }
    bool is_simple() const { return A.dim() == 1 || B.dim() == 1; }
};

enum class LeafKind { internal, dim1, dim2, indecomposable };

enum class SplitStrategy { first, all, prefer_simple };

struct DecompTree {
    SemigroupGens node;
    LeafKind leaf_kind = LeafKind::internal;
    std::optional<GluingSplit> split;
    std::vector<DecompTree> children; // empty, or {A-subtree, B-subtree}

    explicit DecompTree(SemigroupGens n) : node(std::move(n)) {}
    bool is_leaf() const { return leaf_kind != LeafKind::internal; }
};

// Validates one bipartition of C's generators as a gluing. part1 maps to the
// (k1, A) side. Returns nullopt when the bipartition is not a gluing.
// Bipartitions where both parts are singletons are rejected: dimension-2
// semigroups are terminal base cases here.
std::optional<GluingSplit> check_split(const SemigroupGens& C, const std::vector<int64>& part1,
                                       const std::vector<int64>& part2);

// All valid gluings of C, one per unordered bipartition. The part containing
// the smallest generator is always presented as the (k2, B) side. Ordered by
// the sorted contents of part1.
std::vector<GluingSplit> find_gluings(const SemigroupGens& C);

// Gluings with a singleton part, normalized so the singleton side is first.
std::vector<GluingSplit> simple_splits(const SemigroupGens& C);

DecompTree decomposition_tree(const SemigroupGens& C, SplitStrategy strategy);

// Every maximal decomposition tree, capped (default 64); enumeration order is
// the pairing of find_gluings order with the children's recursive orders.
std::vector<DecompTree> all_decomposition_trees(const SemigroupGens& C, int cap = 64);

Binomial rho_binomial(const GluingSplit& split);

struct ArithmeticReport {
    bool is_arithmetic = false;
    int64 diff = 0;
    bool is_decomposable = false;
    // Progression classification: decomposable iff embedding dimension 3 with
    // gens {2c0, 2c0+d, 2c0+2d}, d odd, gcd(c0, d) = 1.
    bool predicted_decomposable = false;
    bool consistent = false;
};

ArithmeticReport is_arithmetic_and_decomposable(const SemigroupGens& C);

// Lexicographically smallest e >= 0 with sum e_i * gens_i = target, if any.
std::optional<std::vector<int64>> lex_smallest_representation(const std::vector<int64>& gens,
                                                              int64 target);

} // namespace glulib
