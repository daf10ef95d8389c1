#pragma once

#include <cstdint>
#include <vector>

#include "glulib/arith.hpp"
#include "glulib/betti_table.hpp"
#include "glulib/gluing.hpp"

namespace glulib {

struct OracleOptions {
    int64 field_char = 32003; // prime, or 0 for exact rational arithmetic
    int64 degree_bound = -1;  // -1: betti_degree_bound(C)
    bool parallel = true;
};

// Degree past which the squarefree divisor complex is a full simplex:
// frobenius(C) + sum(gens) + 1. All graded Betti entries live below it.
int64 betti_degree_bound(const SemigroupGens& C);

// Reduced homology dimensions of a simplicial complex given as faces grouped
// by vertex count (faces_by_card[k] = bitmasks with k bits). Result h has
// h[k] = dim Htilde_{k-1} over GF(char) (char 0 = Q), k = 0..n.
std::vector<int64> reduced_homology(const std::vector<std::vector<std::uint32_t>>& faces_by_card,
                                    int64 field_char);

// Faces of the squarefree divisor complex of C at degree j, grouped by
// cardinality. F is a face iff j - sum_{i in F} c_i lies in C.
std::vector<std::vector<std::uint32_t>> divisor_complex(const SemigroupGens& C, int64 j);

// Independent graded Betti numbers: beta_{i,j} = dim Htilde_{i-1} of the
// divisor complex at j, scanned over all j in C up to the degree bound.
// The parallel path partitions degrees across OpenMP threads and merges
// per-degree results in degree order, so output is schedule-independent.
BettiTable graded_betti_oracle(const SemigroupGens& C, const OracleOptions& opts = {});

// Plain single-loop reference for the scan above; kept for differential
// testing against the parallel kernel.
BettiTable graded_betti_oracle_serial(const SemigroupGens& C, const OracleOptions& opts = {});

// Minimal binomial generators of the defining ideal via fiber graphs: at each
// degree with a disconnected fiber graph, (components - 1) spanning binomials
// connect every component's lexicographically smallest factorization to the
// base component's. Degrees scanned up to bound (-1: betti_degree_bound).
std::vector<Binomial> minimal_generators_of_ideal(const SemigroupGens& C, int64 bound = -1);

// All factorizations of j over the generators, lexicographically sorted.
std::vector<std::vector<int64>> factorizations(const SemigroupGens& C, int64 j,
                                               int64 node_budget = 2000000);

// Membership indicator of 0..limit; the Hilbert function of k[C].
std::vector<std::uint8_t> hilbert_function_oracle(const SemigroupGens& C, int64 limit);

// Thread cap honoring the GLULIB_THREADS environment variable.
int thread_budget();

} // namespace glulib
