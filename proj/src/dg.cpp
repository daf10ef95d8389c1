#include "glulib/dg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "glulib/errors.hpp"
#include "glulib/oracle.hpp"

namespace glulib {

namespace {

int narrow_exp(int64 v) {
    if (v < 0 || v > (int64(1) << 30)) throw std::invalid_argument("exponent out of range");
    return static_cast<int>(v);
}

bool element_is_zero(const Element& u) {
    for (const Poly& p : u)
        if (!p.is_zero()) return false;
    return true;
}

// x + sign*y; an empty element stands for zero of any size.
Element add_scaled(Element x, const Element& y, int64 sign) {
    if (y.empty()) return x;
    if (x.empty()) x.assign(y.size(), Poly::zero());
    for (size_t i = 0; i < y.size(); ++i)
        if (!y[i].is_zero()) x[i] += y[i].scaled(sign);
    return x;
}

bool elements_equal(const Element& x, const Element& y) {
    if (x.size() == y.size()) return x == y;
    return element_is_zero(x) && element_is_zero(y);
}

Element basis_element(const FreeComplex& F, int level, int idx) {
    Element e(static_cast<size_t>(F.rank(level)), Poly::zero());
    e[static_cast<size_t>(idx)] = Poly::constant(F.ring.nvars(), 1);
    return e;
}

} // namespace

Element zero_element(const FreeComplex& F, int level) {
    if (level < 0 || level > F.length()) return {};
    return Element(static_cast<size_t>(F.rank(level)), Poly::zero());
}

Element apply_diff(const FreeComplex& F, int k, const Element& u) {
    if (k < 1 || k > F.length()) return {};
    const PolyMatrix& d = F.diff(k);
    Element out(static_cast<size_t>(d.rows), Poly::zero());
    for (int c = 0; c < d.cols; ++c) {
        const Poly& uc = u[static_cast<size_t>(c)];
        if (uc.is_zero()) continue;
        for (int r = 0; r < d.rows; ++r)
            if (!d.at(r, c).is_zero()) out[static_cast<size_t>(r)] += d.at(r, c) * uc;
    }
    return out;
}

Element dg_multiply(const FreeComplex& F, const DGProductTable& t, int i, const Element& u, int j,
                    const Element& v) {
    if (i < 0 || j < 0 || i + j > F.length()) return {};
    if (u.empty() || v.empty()) return zero_element(F, i + j);
    Element out = zero_element(F, i + j);
    const int rj = F.rank(j);
    for (int a = 0; a < F.rank(i); ++a) {
        const Poly& ua = u[static_cast<size_t>(a)];
        if (ua.is_zero()) continue;
        for (int b = 0; b < rj; ++b) {
            const Poly& vb = v[static_cast<size_t>(b)];
            if (vb.is_zero()) continue;
            const Element& prod = t.at(i, a, j, b, rj);
            if (prod.empty()) continue;
            Poly f = ua * vb;
            for (size_t c = 0; c < prod.size(); ++c)
                if (!prod[c].is_zero()) out[c] += f * prod[c];
        }
    }
    return out;
}

DGProductTable koszul_dg(const WeightedRing& ring, int m) {
    if (m > 30) throw resource_error("koszul_dg: too many elements");
    std::vector<std::vector<uint32_t>> masks(static_cast<size_t>(m) + 1);
    for (uint32_t f = 0; f < (uint32_t(1) << m); ++f)
        masks[static_cast<size_t>(__builtin_popcount(f))].push_back(f);
    auto index_of = [&](int level, uint32_t mask) {
        const auto& v = masks[static_cast<size_t>(level)];
        return static_cast<size_t>(std::lower_bound(v.begin(), v.end(), mask) - v.begin());
    };
    DGProductTable t;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) {
            const auto& bi = masks[static_cast<size_t>(i)];
            const auto& bj = masks[static_cast<size_t>(j)];
            std::vector<Element> block(bi.size() * bj.size());
            for (size_t a = 0; a < bi.size(); ++a)
                for (size_t b = 0; b < bj.size(); ++b) {
                    Element e(masks[static_cast<size_t>(i + j)].size(), Poly::zero());
                    if ((bi[a] & bj[b]) == 0) {
                        // Shuffle sign: inversions between the two index sets.
                        int inv = 0;
                        for (int s = 0; s < m; ++s)
                            if (bi[a] >> s & 1)
                                inv += __builtin_popcount(bj[b] & ((uint32_t(1) << s) - 1));
                        e[index_of(i + j, bi[a] | bj[b])] =
                            Poly::constant(ring.nvars(), inv % 2 == 0 ? 1 : -1);
                    }
                    block[a * bj.size() + b] = std::move(e);
                }
            t.products[{i, j}] = std::move(block);
        }
    return t;
}

DGProductTable dg_tensor_product(const FreeComplex& A, const DGProductTable& ta,
                                 const FreeComplex& B, const DGProductTable& tb) {
    const int len = A.length() + B.length();
    auto rank_of = [&](int k) {
        int r = 0;
        for (int i = std::max(0, k - B.length()); i <= std::min(A.length(), k); ++i)
            r += A.rank(i) * B.rank(k - i);
        return r;
    };
    DGProductTable t;
    for (int r = 0; r <= len; ++r)
        for (int s = 0; r + s <= len; ++s) {
            std::vector<Element> block(static_cast<size_t>(rank_of(r)) *
                                       static_cast<size_t>(rank_of(s)));
            size_t upos = 0;
            for (int i = std::max(0, r - B.length()); i <= std::min(A.length(), r); ++i)
                for (int a = 0; a < A.rank(i); ++a)
                    for (int b = 0; b < B.rank(r - i); ++b, ++upos) {
                        size_t vpos = 0;
                        for (int j = std::max(0, s - B.length()); j <= std::min(A.length(), s);
                             ++j)
                            for (int c = 0; c < A.rank(j); ++c)
                                for (int d = 0; d < B.rank(s - j); ++d, ++vpos) {
                                    Element e(static_cast<size_t>(rank_of(r + s)), Poly::zero());
                                    if (i + j <= A.length() &&
                                        (r - i) + (s - j) <= B.length()) {
                                        const Element& pa = ta.at(i, a, j, c, A.rank(j));
                                        const Element& pb =
                                            tb.at(r - i, b, s - j, d, B.rank(s - j));
                                        const int64 sign =
                                            ((r - i) % 2 != 0 && j % 2 != 0) ? -1 : 1;
                                        for (size_t x = 0; x < pa.size(); ++x) {
                                            if (pa[x].is_zero()) continue;
                                            for (size_t y = 0; y < pb.size(); ++y) {
                                                if (pb[y].is_zero()) continue;
                                                int pos = tensor_position(
                                                    A, B, r + s, i + j, static_cast<int>(x),
                                                    static_cast<int>(y));
                                                e[static_cast<size_t>(pos)] +=
                                                    (pa[x] * pb[y]).scaled(sign);
                                            }
                                        }
                                    }
                                    block[upos * static_cast<size_t>(rank_of(s)) + vpos] =
                                        std::move(e);
                                }
                    }
            t.products[{r, s}] = std::move(block);
        }
    return t;
}

DGProductTable dg_cone(const FreeComplex& G, const DGProductTable& tg, const Poly& rho) {
    (void)rho; // the product does not involve rho; only the differential does
    const int len = G.length() + 1;
    auto rank_of = [&](int k) { return G.rank(k) + G.rank(k - 1); };
    DGProductTable t;
    for (int i = 0; i <= len; ++i)
        for (int j = 0; i + j <= len; ++j) {
            std::vector<Element> block(static_cast<size_t>(rank_of(i)) *
                                       static_cast<size_t>(rank_of(j)));
            for (int u = 0; u < rank_of(i); ++u)
                for (int v = 0; v < rank_of(j); ++v) {
                    Element e(static_cast<size_t>(rank_of(i + j)), Poly::zero());
                    const bool u_first = u < G.rank(i);
                    const bool v_first = v < G.rank(j);
                    if (u_first && v_first && i + j <= G.length()) {
                        const Element& p = tg.at(i, u, j, v, G.rank(j));
                        for (size_t c = 0; c < p.size(); ++c)
                            if (!p[c].is_zero()) e[c] += p[c];
                    } else if (u_first && !v_first) {
                        // (a1, 0) * (0, b2) = (0, a1 b2)
                        const int b2 = v - G.rank(j);
                        const Element& p = tg.at(i, u, j - 1, b2, G.rank(j - 1));
                        for (size_t c = 0; c < p.size(); ++c)
                            if (!p[c].is_zero())
                                e[static_cast<size_t>(G.rank(i + j)) + c] += p[c];
                    } else if (!u_first && v_first) {
                        // (0, b1) * (a2, 0) = (0, (-1)^j b1 a2)
                        const int b1 = u - G.rank(i);
                        const Element& p = tg.at(i - 1, b1, j, v, G.rank(j));
                        const int64 sign = j % 2 == 0 ? 1 : -1;
                        for (size_t c = 0; c < p.size(); ++c)
                            if (!p[c].is_zero())
                                e[static_cast<size_t>(G.rank(i + j)) + c] += p[c].scaled(sign);
                    }
                    block[static_cast<size_t>(u) * static_cast<size_t>(rank_of(j)) +
                          static_cast<size_t>(v)] = std::move(e);
                }
            t.products[{i, j}] = std::move(block);
        }
    return t;
}

DGCheckReport check_dg(const FreeComplex& F, const DGProductTable& t, int max_assoc_level) {
    DGCheckReport rep;
    auto note = [&rep](std::string s) {
        if (rep.violations.size() < 64) rep.violations.push_back(std::move(s));
    };
    const int len = F.length();
    if (F.rank(0) != 1) {
        rep.unital = false;
        note("level 0 does not have rank 1");
        return rep;
    }
    const Element unit = basis_element(F, 0, 0);
    for (int j = 0; j <= len; ++j)
        for (int b = 0; b < F.rank(j); ++b) {
            const Element eb = basis_element(F, j, b);
            if (!elements_equal(t.at(0, 0, j, b, F.rank(j)), eb) ||
                !elements_equal(t.at(j, b, 0, 0, 1), eb)) {
                rep.unital = false;
                note("unit fails at level " + std::to_string(j) + " index " + std::to_string(b));
            }
        }
    for (int i = 0; i <= len; ++i)
        for (int j = 0; i + j <= len; ++j)
            for (int a = 0; a < F.rank(i); ++a)
                for (int b = 0; b < F.rank(j); ++b) {
                    const Element& uv = t.at(i, a, j, b, F.rank(j));
                    const Element& vu = t.at(j, b, i, a, F.rank(i));
                    const int64 sign = (i % 2 != 0 && j % 2 != 0) ? -1 : 1;
                    if (!elements_equal(uv, add_scaled({}, vu, sign))) {
                        rep.commutative = false;
                        note("commutativity fails at (" + std::to_string(i) + "," +
                             std::to_string(a) + ")x(" + std::to_string(j) + "," +
                             std::to_string(b) + ")");
                    }
                    if (i + j >= 1) {
                        Element lhs = apply_diff(F, i + j, uv);
                        Element da = apply_diff(F, i, basis_element(F, i, a));
                        Element db = apply_diff(F, j, basis_element(F, j, b));
                        Element rhs = dg_multiply(F, t, i - 1, da, j, basis_element(F, j, b));
                        rhs = add_scaled(std::move(rhs),
                                         dg_multiply(F, t, i, basis_element(F, i, a), j - 1, db),
                                         i % 2 == 0 ? 1 : -1);
                        if (!elements_equal(lhs, rhs)) {
                            rep.leibniz = false;
                            note("Leibniz fails at (" + std::to_string(i) + "," +
                                 std::to_string(a) + ")x(" + std::to_string(j) + "," +
                                 std::to_string(b) + ")");
                        }
                    }
                }
    for (int i = 0; i <= len; ++i)
        for (int j = 0; i + j <= len; ++j)
            for (int k = 0; i + j + k <= std::min(len, max_assoc_level); ++k)
                for (int a = 0; a < F.rank(i); ++a)
                    for (int b = 0; b < F.rank(j); ++b)
                        for (int c = 0; c < F.rank(k); ++c) {
                            Element left = dg_multiply(F, t, i + j, t.at(i, a, j, b, F.rank(j)),
                                                       k, basis_element(F, k, c));
                            Element right = dg_multiply(F, t, i, basis_element(F, i, a), j + k,
                                                        t.at(j, b, k, c, F.rank(k)));
                            if (!elements_equal(left, right)) {
                                rep.associative = false;
                                note("associativity fails at levels (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")");
                            }
                        }
    return rep;
}

namespace {

Poly remap_poly(const Poly& p, int parent_nvars, int var_offset, int child_nvars) {
    Poly q;
    for (const auto& [e, c] : p.terms) {
        Exponents ne(static_cast<size_t>(parent_nvars), 0);
        for (int i = 0; i < child_nvars; ++i)
            ne[static_cast<size_t>(var_offset + i)] = e[static_cast<size_t>(i)];
        q.terms.emplace(std::move(ne), c);
    }
    return q;
}

DGProductTable import_dg(const DGProductTable& t, int parent_nvars, int var_offset,
                         int child_nvars) {
    DGProductTable out;
    for (const auto& [key, block] : t.products) {
        std::vector<Element> nb(block.size());
        for (size_t i = 0; i < block.size(); ++i) {
            Element e(block[i].size());
            for (size_t c = 0; c < block[i].size(); ++c)
                e[c] = remap_poly(block[i][c], parent_nvars, var_offset, child_nvars);
            nb[i] = std::move(e);
        }
        out.products[key] = std::move(nb);
    }
    return out;
}

// Reindex variables so a node's result lives over the ring of its own
// semigroup, weights ascending. A nested glue comes out in part-block order,
// which the parent's import cannot consume.
void canonicalize_vars(ResolutionResult& r, const SemigroupGens& C) {
    const auto& gens = C.gens();
    const int n = r.complex.ring.nvars();
    std::vector<size_t> perm(static_cast<size_t>(n));
    bool identity = true;
    for (int i = 0; i < n; ++i) {
        const int64 w = r.complex.ring.weights[static_cast<size_t>(i)];
        auto it = std::lower_bound(gens.begin(), gens.end(), w);
        if (it == gens.end() || *it != w)
            throw invariant_error("build_resolution: ring weight is not a generator of the node");
        perm[static_cast<size_t>(i)] = static_cast<size_t>(it - gens.begin());
        if (perm[static_cast<size_t>(i)] != static_cast<size_t>(i)) identity = false;
    }
    if (identity) return;
    auto remap = [&](const Poly& p) {
        Poly q;
        for (const auto& [e, c] : p.terms) {
            Exponents ne(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; ++i) ne[perm[static_cast<size_t>(i)]] = e[static_cast<size_t>(i)];
            q.terms.emplace(std::move(ne), c);
        }
        return q;
    };
    for (PolyMatrix& d : r.complex.diffs)
        for (Poly& p : d.a) p = remap(p);
    if (r.dg)
        for (auto& [key, block] : r.dg->products)
            for (Element& el : block)
                for (Poly& p : el) p = remap(p);
    r.complex.ring = make_ring(gens);
}

std::string gens_string(const SemigroupGens& S) {
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < S.gens().size(); ++i) os << (i ? "," : "") << S.gens()[i];
    os << ">";
    return os.str();
}

ResolutionResult leaf_resolution(const SemigroupGens& S, const ResolutionOptions& opts) {
    const int n = S.dim();
    WeightedRing ring = make_ring(S.gens());
    if (n == 1) {
        ResolutionResult r{koszul_complex(ring, {}), std::nullopt};
        if (opts.want_dg) r.dg = koszul_dg(ring, 0);
        return r;
    }
    if (n == 2) {
        Exponents e1(2, 0), e2(2, 0);
        e1[0] = narrow_exp(S.gens()[1]);
        e2[1] = narrow_exp(S.gens()[0]);
        Poly rel = Poly::monomial(e1, 1) - Poly::monomial(e2, 1);
        ResolutionResult r{koszul_complex(ring, {rel}), std::nullopt};
        if (opts.want_dg) r.dg = koszul_dg(ring, 1);
        return r;
    }
    std::vector<Binomial> gens = minimal_generators_of_ideal(S);
    const int mu = static_cast<int>(gens.size());
    if (mu == n - 1) {
        std::vector<Poly> els;
        els.reserve(gens.size());
        for (const Binomial& g : gens) els.push_back(binomial_to_poly(g));
        ResolutionResult r{koszul_complex(ring, els), std::nullopt};
        if (opts.want_dg) r.dg = koszul_dg(ring, mu);
        return r;
    }
    if (n == 3) {
        if (mu != 3) throw invariant_error("leaf " + gens_string(S) + ": mu out of range");
        return {herzog_resolution(ring, gens), std::nullopt};
    }
    if (n == 4 && mu == 5 && pseudo_frobenius(S).size() == 1) {
        auto shape = parse_bresinsky(gens);
        if (!shape)
            throw std::domain_error("leaf " + gens_string(S) +
                                    ": generators do not fit the five-generator Gorenstein pattern");
        return {bresinsky_resolution(ring, *shape), std::nullopt};
    }
    throw std::domain_error("no resolution builder for leaf " + gens_string(S) +
                            " (embdim " + std::to_string(n) + ", mu " + std::to_string(mu) + ")");
}

ResolutionResult build_node(const DecompTree& t, const ResolutionOptions& opts) {
    if (t.is_leaf()) return leaf_resolution(t.node, opts);
    const GluingSplit& sp = *t.split;
    ResolutionResult ra = build_node(t.children[0], opts);
    ResolutionResult rb = build_node(t.children[1], opts);
    WeightedRing ring = make_ring_xy(sp.part1(), sp.part2());
    const int p = sp.A.dim(), q = sp.B.dim();
    FreeComplex FA = import_complex(ra.complex, ring, 0, sp.k1);
    FreeComplex FB = import_complex(rb.complex, ring, p, sp.k2);
    FreeComplex T = tensor_complex(FA, FB);

    Exponents el(static_cast<size_t>(p + q), 0), er(static_cast<size_t>(p + q), 0);
    for (int i = 0; i < p; ++i) el[static_cast<size_t>(i)] = narrow_exp(sp.alpha[static_cast<size_t>(i)]);
    for (int j = 0; j < q; ++j)
        er[static_cast<size_t>(p + j)] = narrow_exp(sp.beta[static_cast<size_t>(j)]);
    Poly rho = Poly::monomial(el, 1) - Poly::monomial(er, 1);

    ResolutionResult out{mapping_cone_mul(T, rho), std::nullopt};
    if (opts.want_dg && ra.dg && rb.dg) {
        DGProductTable ta = import_dg(*ra.dg, p + q, 0, p);
        DGProductTable tb = import_dg(*rb.dg, p + q, p, q);
        out.dg = dg_cone(T, dg_tensor_product(FA, ta, FB, tb), rho);
    }
    canonicalize_vars(out, t.node);
    return out;
}

} // namespace

ResolutionResult build_resolution(const SemigroupGens& C, const DecompTree& tree,
                                  const ResolutionOptions& opts) {
    if (!(tree.node == C))
        throw std::invalid_argument("build_resolution: tree does not match the semigroup");
    return build_node(tree, opts);
}

} // namespace glulib
