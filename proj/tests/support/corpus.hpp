// Deterministic random gluing towers shared by the test binaries.
// Every member is constructed explicitly as a gluing (or a tower of them),
// so decomposability is guaranteed by construction, generator values stay
// small enough for the homology oracle, and fixed seeds keep runs identical.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "glulib/arith.hpp"
#include "glulib/gluing.hpp"

namespace corpus {

using glulib::int64;

// A random numerical semigroup with a minimal generating set, gcd 1,
// dimension in [min_dim, max_dim], generators bounded by max_gen.
inline std::vector<int64> random_leaf(std::mt19937_64& rng, int min_dim, int max_dim,
                                      int64 max_gen = 60) {
    std::uniform_int_distribution<int> dim_dist(min_dim, max_dim);
    std::uniform_int_distribution<int64> gen_dist(2, max_gen);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int d = dim_dist(rng);
        if (d == 1)
            return {1};
        std::vector<int64> g(static_cast<size_t>(d));
        for (auto& x : g)
            x = gen_dist(rng);
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        if (static_cast<int>(g.size()) != d)
            continue;
        glulib::SemigroupGens S(g);
        if (S.gcd() != 1 || !S.minimal())
            continue;
        return g;
    }
    return {1}; // unreachable in practice
}

// Multipliers usable on one side of a gluing: elements of <S> that are not
// minimal generators (0 and 1 excluded unless S = N, where 1 is the sole
// generator and the candidates start at 2).
inline std::vector<int64> glue_multipliers(const glulib::SemigroupGens& S, int64 hi) {
    std::vector<int64> out;
    for (int64 x = 2; x <= hi; ++x) {
        if (!S.contains(x))
            continue;
        if (std::binary_search(S.gens().begin(), S.gens().end(), x))
            continue;
        out.push_back(x);
    }
    return out;
}

// One random gluing k1*A u k2*B of the two generating sets, if a valid pair
// of multipliers keeping all values <= value_cap exists. Returns the merged
// minimal generating set of C.
inline std::optional<std::vector<int64>> try_glue(const std::vector<int64>& ag,
                                                  const std::vector<int64>& bg,
                                                  std::mt19937_64& rng, int64 value_cap = 2000) {
    glulib::SemigroupGens A(ag), B(bg);
    const int64 amax = ag.back(), bmax = bg.back();
    std::vector<int64> k1s = glue_multipliers(B, std::min<int64>(120, value_cap / amax));
    std::vector<int64> k2s = glue_multipliers(A, std::min<int64>(120, value_cap / bmax));
    if (k1s.empty() || k2s.empty())
        return std::nullopt;
    std::uniform_int_distribution<size_t> i1(0, k1s.size() - 1), i2(0, k2s.size() - 1);
    for (int attempt = 0; attempt < 60; ++attempt) {
        int64 k1 = k1s[i1(rng)], k2 = k2s[i2(rng)];
        if (glulib::gcd64(k1, k2) != 1)
            continue;
        std::vector<int64> part1, part2, merged;
        for (int64 a : ag)
            part1.push_back(k1 * a);
        for (int64 b : bg)
            part2.push_back(k2 * b);
        merged = part1;
        merged.insert(merged.end(), part2.begin(), part2.end());
        std::sort(merged.begin(), merged.end());
        if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
            continue;
        glulib::SemigroupGens C(merged);
        if (C.gcd() != 1 || !C.minimal())
            continue;
        if (!glulib::check_split(C, part1, part2))
            continue;
        return merged;
    }
    return std::nullopt;
}

// count random gluing towers: one or two gluings deep, total dimension <= 6,
// all generator values <= value_cap. Deterministic for a fixed seed.
inline std::vector<std::vector<int64>> gluing_corpus(size_t count, std::uint64_t seed,
                                                     int min_leaf_dim = 1, int max_leaf_dim = 3,
                                                     int64 value_cap = 2000) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int64>> out;
    std::bernoulli_distribution deep(0.35);
    while (out.size() < count) {
        std::vector<int64> left = random_leaf(rng, min_leaf_dim, max_leaf_dim);
        if (deep(rng)) {
            // inner gluing first, with headroom for the outer multipliers
            std::vector<int64> l2 = random_leaf(rng, min_leaf_dim, max_leaf_dim);
            if (auto inner = try_glue(left, l2, rng, 300))
                left = *inner;
            else
                continue;
        }
        std::vector<int64> right = random_leaf(rng, min_leaf_dim, max_leaf_dim);
        if (left.size() + right.size() > 6)
            continue;
        if (auto glued = try_glue(left, right, rng, value_cap))
            out.push_back(*glued);
    }
    return out;
}

// Towers whose leaves all have dimension <= 2, so every node is a complete
// intersection and the resolution builder equips the tower with a DG algebra
// structure via Koszul leaves.
inline std::vector<std::vector<int64>> ci_tower_corpus(size_t count, std::uint64_t seed) {
    return gluing_corpus(count, seed, 1, 2, 2000);
}

} // namespace corpus
