#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "glulib/errors.hpp"

namespace glulib {

using int64 = std::int64_t;

// Shared grow-only membership table for a numerical semigroup.
// Readers take an immutable snapshot; growth replaces the snapshot under a
// mutex, so concurrent readers never see a partially built table.
class MembershipCache {
public:
    explicit MembershipCache(std::vector<int64> gens);

    // Snapshot covering values 0..limit inclusive. Grows geometrically.
    std::shared_ptr<const std::vector<std::uint8_t>> snapshot(int64 limit) const;

    bool contains(int64 x) const;

private:
    std::vector<int64> gens_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<const std::vector<std::uint8_t>> table_;
};

// Generators of a numerical (sub)semigroup of N, sorted ascending, distinct,
// all positive. gcd may exceed 1 (then <gens> is isomorphic to gcd * S').
class SemigroupGens {
public:
    explicit SemigroupGens(std::vector<int64> gens);

    const std::vector<int64>& gens() const { return gens_; }
    int64 gcd() const { return gcd_; }
    bool minimal() const { return minimal_; }
    int dim() const { return static_cast<int>(gens_.size()); }
    int64 sum() const;

    bool operator==(const SemigroupGens& o) const { return gens_ == o.gens_; }

    // Membership of x in <gens>. x < 0 is an argument error.
    bool contains(int64 x) const;

    // Immutable membership snapshot valid for 0..limit; lock-free reads.
    std::shared_ptr<const std::vector<std::uint8_t>> membership(int64 limit) const;

private:
    std::vector<int64> gens_;
    int64 gcd_ = 0;
    bool minimal_ = false;
    std::shared_ptr<MembershipCache> cache_;
};

// Unique minimal generating set of <gens>; gcd d > 1 handled by rescaling.
std::vector<int64> minimal_generators(const std::vector<int64>& gens);

// Largest integer not in S. Requires gcd 1. frobenius(N) = -1.
int64 frobenius(const SemigroupGens& S);

// Apery set of S relative to m in S, m > 0: for each residue r mod m the
// least element of S congruent to r. Returned indexed by residue 0..m-1.
std::vector<int64> apery_set(const SemigroupGens& S, int64 m);

// Pseudo-Frobenius numbers: x not in S with x + s in S for all s in S\{0}.
// For S = N this is {-1}. |result| is the Cohen-Macaulay type of k[S].
std::vector<int64> pseudo_frobenius(const SemigroupGens& S);

// Gaps of S: the finite complement N \ S. Requires gcd 1.
std::vector<int64> gaps(const SemigroupGens& S);

int64 gcd64(int64 a, int64 b);

// a*b with overflow check (resource_error on overflow).
int64 mul_checked(int64 a, int64 b);
int64 add_checked(int64 a, int64 b);

} // namespace glulib
