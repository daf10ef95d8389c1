#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "glulib/betti_table.hpp"
#include "glulib/gluing.hpp"
#include "glulib/poly.hpp"

namespace glulib {

struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Poly> a;

    static PolyMatrix zero(int rows, int cols) {
        PolyMatrix m;
        m.rows = rows;
        m.cols = cols;
        m.a.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Poly::zero());
        return m;
    }
    Poly& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Poly& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

PolyMatrix matmul(const PolyMatrix& x, const PolyMatrix& y);

// x^left - x^right as a polynomial (full-length exponent vectors).
Poly binomial_to_poly(const Binomial& b);

// Finite free complex F_len -> ... -> F_1 -> F_0 with weighted-homogeneous
// differentials. diffs[k] is d_k : F_k -> F_{k-1} (diffs[0] stays empty).
struct FreeComplex {
    WeightedRing ring;
    std::vector<std::vector<int64>> shifts; // shifts[k]: degree of each basis element of F_k
    std::vector<PolyMatrix> diffs;

    int length() const { return static_cast<int>(shifts.size()) - 1; }
    int rank(int k) const {
        return k < 0 || k > length() ? 0 : static_cast<int>(shifts[static_cast<size_t>(k)].size());
    }
    const PolyMatrix& diff(int k) const { return diffs[static_cast<size_t>(k)]; }
};

struct ComplexReport {
    bool d2_ok = true;
    bool homogeneous_ok = true;
    bool minimal_ok = true;
    std::vector<std::string> violations;
    bool ok() const { return d2_ok && homogeneous_ok && minimal_ok; }
};

// d^2 = 0, entry degrees = column shift - row shift, and no constant entries.
ComplexReport verify_complex(const FreeComplex& F);

// Koszul complex on homogeneous elements; basis of level k is the k-subsets
// of [m] by ascending bitmask.
FreeComplex koszul_complex(const WeightedRing& ring, const std::vector<Poly>& elements);

// Hilbert-Burch resolution 0 -> R^2 -> R^3 -> R for an embedding-dimension-3
// non-CI semigroup ring: the three generators are matched against the
// 2x3-minor pattern and the six exponents solved exactly. Rejects mu != 3.
FreeComplex herzog_resolution(const WeightedRing& ring, const std::vector<Binomial>& gens3);

// Exponent data of the five-generator Gorenstein (embdim 4) shape. role[r]
// maps the pattern's variable slots onto actual ring variables.
struct BresinskyShape {
    std::array<int, 4> role{0, 1, 2, 3};
    int64 c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    int64 d13 = 0, d14 = 0, d31 = 0, d32 = 0, d42 = 0, d43 = 0, d21 = 0, d24 = 0;
};

std::optional<BresinskyShape> parse_bresinsky(const std::vector<Binomial>& gens5);

// Self-dual resolution 0 -> R -> R^5 -> R^5 -> R; the middle matrix is the
// displayed skew pattern and d3 is the transpose of d1. Only d^2 = 0 is
// assumed/checked, not the exponent consistency equations.
FreeComplex bresinsky_resolution(const WeightedRing& ring, const BresinskyShape& shape);

// Child complex moved into a parent ring: variables shift by var_offset and
// every basis degree scales by degree_scale (parent weights must equal
// degree_scale times the child's on that variable range).
FreeComplex import_complex(const FreeComplex& child, const WeightedRing& parent, int var_offset,
                           int64 degree_scale);

// Position of basis pair (a in A_i, b in B_{k-i}) inside tensor level k:
// blocks ordered by ascending i, row-major (a major, b minor) within a block.
int tensor_position(const FreeComplex& A, const FreeComplex& B, int k, int i, int a, int b);

// Tensor product complex with d(u (x) v) = du (x) v + (-1)^i u (x) dv.
FreeComplex tensor_complex(const FreeComplex& A, const FreeComplex& B);

// Mapping cone of multiplication by rho: M_k = G_k + G_{k-1}(-deg rho),
// d(a, b) = (da + (-1)^(k-1) rho b, db).
FreeComplex mapping_cone_mul(const FreeComplex& G, const Poly& rho);

// Ranks and shift multisets of the complex as a Betti table.
BettiTable betti_from_complex(const FreeComplex& F);

struct ExactnessReport {
    bool certified = false;   // some trial achieved all expected ranks
    bool impossible = false;  // a rank bound was exceeded: provably not exact
    int trials = 0;
    int successes = 0;
    std::vector<int64> expected_ranks; // r_k for k = 1..length
    std::string detail;
};

// Random evaluation over GF(prime): a single successful trial certifies the
// Buchsbaum-Eisenbud rank conditions (point rank <= generic rank <= r_k).
// All trials degenerate => inconclusive, never a silent pass.
ExactnessReport verify_exactness_probabilistic(const FreeComplex& F, int64 prime = 32003,
                                               int trials = 5, std::uint64_t seed = 0x5eed);

std::string export_text(const FreeComplex& F);
std::string export_macaulay2(const FreeComplex& F);

} // namespace glulib
