#include "glulib/invariants.hpp"

#include <algorithm>
#include <string>

namespace glulib {

std::vector<int64> betti_from_split(const std::vector<int64>& betti_a,
                                    const std::vector<int64>& betti_b) {
    if (betti_a.empty() || betti_b.empty())
        throw std::invalid_argument("betti vectors must be non-empty");
    if (betti_a[0] != 1 || betti_b[0] != 1)
        throw std::invalid_argument("betti vectors must start with beta_0 = 1");
    size_t la = betti_a.size(), lb = betti_b.size();
    std::vector<int64> conv(la + lb - 1, 0); // resolution of R/(I_A + I_B): tensor ranks
    for (size_t i = 0; i < la; ++i)
        for (size_t j = 0; j < lb; ++j)
            conv[i + j] = add_checked(conv[i + j], mul_checked(betti_a[i], betti_b[j]));
    std::vector<int64> out(la + lb, 0); // mapping cone over multiplication by rho
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < conv.size())
            out[i] = add_checked(out[i], conv[i]);
        if (i >= 1)
            out[i] = add_checked(out[i], conv[i - 1]);
    }
    return out;
}

BettiTable graded_betti_from_split(const GluingSplit& split, const BettiTable& table_a,
                                   const BettiTable& table_b) {
    BettiTable tensor;
    for (const auto& [ka, ma] : table_a.entries)
        for (const auto& [kb, mb] : table_b.entries) {
            int64 j = add_checked(mul_checked(split.k1, ka.second),
                                  mul_checked(split.k2, kb.second));
            tensor.add(ka.first + kb.first, j, mul_checked(ma, mb));
        }
    BettiTable out = tensor;
    int64 shift = mul_checked(split.k1, split.k2);
    for (const auto& [k, m] : tensor.entries)
        out.add(k.first + 1, add_checked(k.second, shift), m);
    return out;
}

namespace {

BettiTable leaf_table(const SemigroupGens& S, int64 oracle_char) {
    BettiTable t;
    if (S.dim() == 1) {
        if (S.gens().front() != 1)
            throw invariant_error("dimension-1 node must be {1}");
        t.add(0, 0, 1);
        return t;
    }
    if (S.dim() == 2) {
        t.add(0, 0, 1);
        t.add(1, mul_checked(S.gens()[0], S.gens()[1]), 1);
        return t;
    }
    OracleOptions opts;
    opts.field_char = oracle_char;
    return graded_betti_oracle(S, opts);
}

} // namespace

BettiTable betti(const SemigroupGens& C, const DecompTree& tree, int64 oracle_char) {
    if (!(tree.node == C))
        throw std::invalid_argument("tree does not describe this semigroup");
    if (tree.is_leaf())
        return leaf_table(C, oracle_char);
    BettiTable ta = betti(tree.split->A, tree.children[0], oracle_char);
    BettiTable tb = betti(tree.split->B, tree.children[1], oracle_char);
    return graded_betti_from_split(*tree.split, ta, tb);
}

int64 cm_type(const SemigroupGens& C) {
    return static_cast<int64>(pseudo_frobenius(C).size());
}

namespace {

struct RegInfo {
    int64 reg = 0;
    int64 delta = 0; // top internal degree of the resolution
};

RegInfo regularity_rec(const SemigroupGens& C, const DecompTree& tree, int64 oracle_char) {
    RegInfo info;
    int n = C.dim();
    if (tree.is_leaf()) {
        BettiTable t = leaf_table(C, oracle_char);
        if (t.pd() != n - 1)
            throw invariant_error("leaf projective dimension differs from embdim - 1");
        info.reg = t.regularity();
        info.delta = t.final_degree();
    } else {
        RegInfo a = regularity_rec(tree.split->A, tree.children[0], oracle_char);
        RegInfo b = regularity_rec(tree.split->B, tree.children[1], oracle_char);
        int64 k1 = tree.split->k1, k2 = tree.split->k2;
        int64 p = tree.split->A.dim(), q = tree.split->B.dim();
        info.reg = mul_checked(k1, a.reg) + mul_checked(k2, b.reg) + (p - 1) * (k1 - 1) +
                   (q - 1) * (k2 - 1) + mul_checked(k1, k2) - 1;
        info.delta = mul_checked(k1, a.delta) + mul_checked(k2, b.delta) + mul_checked(k1, k2);
    }
    if (info.reg != info.delta - (n - 1))
        throw invariant_error("regularity disagrees with top shift minus codimension");
    return info;
}

} // namespace

int64 regularity(const SemigroupGens& C, const DecompTree& tree, int64 oracle_char) {
    if (!(tree.node == C))
        throw std::invalid_argument("tree does not describe this semigroup");
    return regularity_rec(C, tree, oracle_char).reg;
}

namespace {

std::map<int64, int64> numerator_rec(const SemigroupGens& C, const DecompTree& tree,
                                     int64 oracle_char) {
    std::map<int64, int64> num;
    if (tree.is_leaf()) {
        if (C.dim() <= 2) {
            num[0] = 1;
            if (C.dim() == 2)
                num[mul_checked(C.gens()[0], C.gens()[1])] = -1;
            return num;
        }
        BettiTable t = leaf_table(C, oracle_char);
        for (const auto& [k, m] : t.entries) {
            int64 sign = (k.first % 2 == 0) ? 1 : -1;
            num[k.second] += sign * m;
            if (num[k.second] == 0)
                num.erase(k.second);
        }
        return num;
    }
    auto na = numerator_rec(tree.split->A, tree.children[0], oracle_char);
    auto nb = numerator_rec(tree.split->B, tree.children[1], oracle_char);
    int64 k1 = tree.split->k1, k2 = tree.split->k2;
    std::map<int64, int64> prod;
    for (const auto& [ea, ca] : na)
        for (const auto& [eb, cb] : nb) {
            int64 e = add_checked(mul_checked(k1, ea), mul_checked(k2, eb));
            prod[e] += mul_checked(ca, cb);
            if (prod[e] == 0)
                prod.erase(e);
        }
    int64 rho_deg = mul_checked(k1, k2);
    std::map<int64, int64> out = prod;
    for (const auto& [e, c] : prod) {
        int64 shifted = add_checked(e, rho_deg);
        out[shifted] -= c;
        if (out[shifted] == 0)
            out.erase(shifted);
    }
    return out;
}

} // namespace

HilbertNumerator hilbert_numerator(const SemigroupGens& C, const DecompTree& tree,
                                   int64 oracle_char) {
    if (!(tree.node == C))
        throw std::invalid_argument("tree does not describe this semigroup");
    HilbertNumerator h;
    h.coeffs = numerator_rec(C, tree, oracle_char);
    h.denominator_exponents = C.gens();
    // (1-t)^(n-1) must divide the numerator: the quotient ring has Krull
    // dimension 1. Divide out and require a positive value at t = 1.
    int64 top = h.coeffs.empty() ? 0 : h.coeffs.rbegin()->first;
    std::vector<int64> dense(static_cast<size_t>(top) + 1, 0);
    for (const auto& [e, c] : h.coeffs)
        dense[static_cast<size_t>(e)] = c;
    for (int n = C.dim(); n > 1; --n) {
        int64 acc = 0;
        for (size_t i = 0; i < dense.size(); ++i) {
            acc = add_checked(acc, dense[i]);
            dense[i] = acc;
        }
        if (acc != 0)
            throw invariant_error("Hilbert numerator not divisible by (1-t)^(embdim-1)");
        dense.pop_back(); // quotient degree drops by one
    }
    int64 mult = 0;
    for (int64 c : dense)
        mult = add_checked(mult, c);
    if (mult <= 0)
        throw invariant_error("Hilbert series multiplicity must be positive");
    return h;
}

std::vector<int64> expand_hilbert_series(const HilbertNumerator& h, int64 limit) {
    if (limit < 0)
        throw std::invalid_argument("expansion limit must be nonnegative");
    std::vector<int64> a(static_cast<size_t>(limit) + 1, 0);
    for (const auto& [e, c] : h.coeffs)
        if (e <= limit)
            a[static_cast<size_t>(e)] = c;
    for (int64 d : h.denominator_exponents)
        for (int64 i = d; i <= limit; ++i)
            a[static_cast<size_t>(i)] =
                add_checked(a[static_cast<size_t>(i)], a[static_cast<size_t>(i - d)]);
    return a;
}

namespace {

bool ci_rec(const DecompTree& tree) {
    if (tree.node.dim() <= 2)
        return true;
    if (tree.is_leaf())
        return false; // indecomposable with embdim >= 3 cannot be CI
    return ci_rec(tree.children[0]) && ci_rec(tree.children[1]);
}

} // namespace

Classification classify(const SemigroupGens& C, const DecompTree& tree, int64 oracle_char) {
    if (!(tree.node == C))
        throw std::invalid_argument("tree does not describe this semigroup");
    Classification r;
    r.embdim = C.dim();
    r.decomposable = !tree.is_leaf();
    r.cm_type = cm_type(C);
    r.gorenstein = (r.cm_type == 1);
    BettiTable table = betti(C, tree, oracle_char);
    auto totals = table.totals();
    r.mu = totals.size() > 1 ? totals[1] : 0;
    r.complete_intersection = ci_rec(tree);
    if (!r.complete_intersection && tree.is_leaf() && r.embdim >= 3 && r.mu == r.embdim - 1)
        throw invariant_error("indecomposable semigroup has a CI-sized ideal");

    if (r.embdim == 1)
        r.kind = RingKind::polynomial_ring;
    else if (r.embdim == 2)
        r.kind = RingKind::hypersurface;
    else if (r.complete_intersection)
        r.kind = RingKind::complete_intersection;
    else if (r.embdim == 3) {
        if (r.mu != 3 || r.cm_type != 2)
            throw invariant_error("embdim-3 non-CI must have mu 3 and type 2");
        r.kind = RingKind::hilbert_burch;
    } else if (r.cm_type == 2 && r.mu == r.embdim)
        r.kind = RingKind::aci_type2;
    else if (r.gorenstein)
        r.kind = RingKind::gorenstein_non_ci;
    else
        r.kind = RingKind::other;

    if (r.decomposable && r.embdim == 4) {
        if (!(r.complete_intersection || (r.cm_type == 2 && r.mu == 4)))
            throw invariant_error("decomposable embdim-4 must be CI or an ACI of type 2");
    }
    if (r.decomposable && r.embdim == 5) {
        bool third = false;
        for (const auto& s : simple_splits(C))
            if (s.B.dim() == 4 && find_gluings(s.B).empty())
                third = true;
        if (!(r.complete_intersection || (r.cm_type == 2 && r.mu == 5) || third))
            throw invariant_error(
                "decomposable embdim-5 must be CI, a type-2 ACI, or a simple split of an "
                "indecomposable embdim-4 semigroup");
    }
    return r;
}

const char* ring_kind_name(RingKind k) {
    switch (k) {
    case RingKind::polynomial_ring: return "polynomial_ring";
    case RingKind::hypersurface: return "hypersurface";
    case RingKind::complete_intersection: return "complete_intersection";
    case RingKind::hilbert_burch: return "hilbert_burch";
    case RingKind::aci_type2: return "aci_type2";
    case RingKind::gorenstein_non_ci: return "gorenstein_non_ci";
    case RingKind::other: return "other";
    }
    return "other";
}

} // namespace glulib
