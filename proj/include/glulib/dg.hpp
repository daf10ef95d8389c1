#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glulib/complex.hpp"
#include "glulib/gluing.hpp"

namespace glulib {

// Coordinates of a homogeneous element in one level's basis.
using Element = std::vector<Poly>;

// Multiplication table of a DG algebra structure on a free complex:
// products[{i,j}][a * rank_j + b] is the basis product e_a * e_b, an element
// of level i + j. Blocks exist for all i, j >= 0 with i + j <= length.
struct DGProductTable {
    std::map<std::pair<int, int>, std::vector<Element>> products;

    const Element& at(int i, int a, int j, int b, int rank_j) const {
        return products.at({i, j})[static_cast<size_t>(a) * static_cast<size_t>(rank_j) +
                                   static_cast<size_t>(b)];
    }
};

Element zero_element(const FreeComplex& F, int level);
Element apply_diff(const FreeComplex& F, int k, const Element& u);
// Product of u (level i) and v (level j); empty element when i + j exceeds
// the complex length (the target module is zero there).
Element dg_multiply(const FreeComplex& F, const DGProductTable& t, int i, const Element& u, int j,
                    const Element& v);

// Exterior-algebra structure on a Koszul complex (shuffle signs).
DGProductTable koszul_dg(const WeightedRing& ring, int m);

// Product on the tensor complex: (a1 (x) b1)(a2 (x) b2) =
// (-1)^(|b1| |a2|) (a1 a2) (x) (b1 b2).
DGProductTable dg_tensor_product(const FreeComplex& A, const DGProductTable& ta,
                                 const FreeComplex& B, const DGProductTable& tb);

// Product on the mapping cone of multiplication by rho, viewed as
// G (x) (R + R s) with s^2 = 0: (a1, b1)(a2, b2) = (a1 a2, a1 b2 + (-1)^j b1 a2)
// where j is the level of the second factor.
DGProductTable dg_cone(const FreeComplex& G, const DGProductTable& tg, const Poly& rho);

struct DGCheckReport {
    bool unital = true;
    bool commutative = true;
    bool leibniz = true;
    bool associative = true;
    std::vector<std::string> violations;
    bool ok() const { return unital && commutative && leibniz && associative; }
};

// Unit, graded commutativity, the Leibniz rule, and associativity, checked
// on all basis products (associativity on all triples of total level <=
// max_assoc_level).
DGCheckReport check_dg(const FreeComplex& F, const DGProductTable& t, int max_assoc_level = 64);

struct ResolutionOptions {
    bool want_dg = true;
};

struct ResolutionResult {
    FreeComplex complex;
    // Present when every leaf resolution is a Koszul complex (the structure
    // then propagates through tensor products and cones).
    std::optional<DGProductTable> dg;
};

// Minimal free resolution of k[C] along the decomposition tree: leaf
// resolutions (Koszul for complete intersections, the 2x3-minor pattern for
// embdim 3, the five-generator Gorenstein pattern for embdim 4), imported
// into the glued ring, tensored, and capped by a mapping cone on rho.
ResolutionResult build_resolution(const SemigroupGens& C, const DecompTree& tree,
                                  const ResolutionOptions& opts = {});

} // namespace glulib
