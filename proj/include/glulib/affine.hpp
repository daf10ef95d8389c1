#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glulib/arith.hpp"
#include "glulib/gluing.hpp"

namespace glulib {

// Finitely generated subsemigroup of N^m. Generators are nonzero vectors,
// duplicates rejected; the variable x_i has weight |gens[i]| (coordinate sum).
struct AffineSemigroup {
    int m = 0;
    std::vector<std::vector<int64>> gens;

    explicit AffineSemigroup(std::vector<std::vector<int64>> g);
    int dim() const { return m; }
    int count() const { return static_cast<int>(gens.size()); }
    std::vector<int64> weights() const;
};

// Membership indicator of the box [0, bound] (componentwise), indexed
// lexicographically with the last coordinate fastest.
std::vector<std::uint8_t> membership_box(const AffineSemigroup& S, const std::vector<int64>& bound);

// v in <S>? Componentwise-bounded dynamic program.
bool affine_contains(const AffineSemigroup& S, const std::vector<int64>& v);

// All factorizations of d over the generators, lexicographically sorted.
std::vector<std::vector<int64>> affine_factorizations(const AffineSemigroup& S,
                                                      const std::vector<int64>& d,
                                                      int64 node_budget = 2000000);

// Minimal binomial generators of I_S with multidegree inside the box: the
// fiber-graph extraction of the numerical oracle, graded by N^m. The bound is
// mandatory; generators beyond it are not seen.
std::vector<Binomial> affine_fiber_generators(const AffineSemigroup& S,
                                              const std::vector<int64>& bound);

struct AffineBetti {
    std::vector<int64> totals; // beta_i summed over multidegrees in the box
    std::map<std::vector<int64>, std::vector<int64>> by_multidegree;
};

// Multigraded divisor-complex homology over GF(field_char) (0 = exact),
// scanned over semigroup elements in the box. Parallel path merges
// per-multidegree results in a fixed order.
AffineBetti affine_graded_betti(const AffineSemigroup& S, const std::vector<int64>& bound,
                                int64 field_char = 32003, bool parallel = true);

struct AffineGluingReport {
    bool pass = false;
    bool rho_searched = false;
    Binomial rho; // left over A-variables, right over B-variables
    std::vector<int64> rho_multidegree;
    std::vector<std::string> mismatches;
    std::string note;
};

// Empirical check that I_C = I_A + I_B + (rho) minimally, by comparing
// per-multidegree minimal-generator counts inside the box: count_C(d) must be
// count_A(d) + count_B(d), plus exactly 1 at the multidegree of rho. When rho
// is absent, candidates with equal multidegree on both sides are searched in
// the box and the first passing one is reported. PASS is evidence within the
// bound, not proof.
AffineGluingReport affine_gluing_verify(const AffineSemigroup& A, const AffineSemigroup& B,
                                        const std::optional<Binomial>& rho,
                                        const std::vector<int64>& bound);

// Betti totals of the gluing (shared convolution) plus the projective
// dimension law pd(C) = pd(A) + pd(B) + 1, which the result's length asserts.
std::vector<int64> affine_betti_propagate(const std::vector<int64>& betti_a,
                                          const std::vector<int64>& betti_b);

} // namespace glulib
