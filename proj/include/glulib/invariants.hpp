#pragma once

#include <map>
#include <string>
#include <vector>

#include "glulib/arith.hpp"
#include "glulib/betti_table.hpp"
#include "glulib/gluing.hpp"
#include "glulib/oracle.hpp"

namespace glulib {

// Numerator polynomial of the Hilbert series over the denominator
// prod (1 - t^{c_i}); sparse exponent -> coefficient.
struct HilbertNumerator {
    std::map<int64, int64> coeffs;
    std::vector<int64> denominator_exponents;

    void add(int64 exp, int64 c) {
        if (c == 0)
            return;
        auto [it, fresh] = coeffs.emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                coeffs.erase(it);
        }
    }
    bool operator==(const HilbertNumerator& o) const = default;
};

enum class RingKind {
    polynomial_ring,
    hypersurface,
    complete_intersection,
    hilbert_burch,
    aci_type2,
    gorenstein_non_ci,
    other,
};

struct Classification {
    int embdim = 0;
    bool decomposable = false;
    bool complete_intersection = false;
    bool gorenstein = false;
    int64 cm_type = 0;
    int64 mu = 0; // minimal generators of the defining ideal
    RingKind kind = RingKind::other;
};

// Total Betti numbers of the gluing from the parts':
// beta_i(C) = sum_{i'} beta_{i'}(A) * (beta_{i-i'}(B) + beta_{i-i'-1}(B)).
std::vector<int64> betti_from_split(const std::vector<int64>& betti_a,
                                    const std::vector<int64>& betti_b);

// Graded version; tables arrive in the parts' own weightings and degrees are
// rescaled exactly once here: j = k1*r + k2*s, cone copy shifted by k1*k2.
BettiTable graded_betti_from_split(const GluingSplit& split, const BettiTable& table_a,
                                   const BettiTable& table_b);

// Graded Betti table by recursion over the tree. Leaves: {1} and <a,b> have
// pinned tables; indecomposable leaves fall back to the homology oracle over
// GF(oracle_char).
BettiTable betti(const SemigroupGens& C, const DecompTree& tree, int64 oracle_char = 32003);

// Cohen-Macaulay type = number of pseudo-Frobenius elements. Equals the last
// total Betti number of any tree-derived table (tested, not assumed).
int64 cm_type(const SemigroupGens& C);

// Castelnuovo-Mumford regularity via the additivity recursion
//   reg(C) = k1 reg(A) + k2 reg(B) + (p-1)(k1-1) + (q-1)(k2-1) + k1 k2 - 1,
// cross-checked against reg = delta_C - (n-1) where delta is the top shift.
int64 regularity(const SemigroupGens& C, const DecompTree& tree, int64 oracle_char = 32003);

// Hilbert numerator via N_C(t) = (1 - t^{k1 k2}) N_A(t^{k1}) N_B(t^{k2}).
HilbertNumerator hilbert_numerator(const SemigroupGens& C, const DecompTree& tree,
                                   int64 oracle_char = 32003);

// Expand numerator / prod(1 - t^{c_i}) as a power series up to degree limit.
std::vector<int64> expand_hilbert_series(const HilbertNumerator& h, int64 limit);

Classification classify(const SemigroupGens& C, const DecompTree& tree, int64 oracle_char = 32003);

const char* ring_kind_name(RingKind k);

} // namespace glulib
