#include "glulib/affine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "glulib/errors.hpp"
#include "glulib/invariants.hpp"
#include "glulib/oracle.hpp"

namespace glulib {

namespace {

constexpr int64 kBoxCellCap = int64(1) << 26;

// Row-major indexing of the box [0, bound], last coordinate fastest.
struct BoxIndexer {
    std::vector<int64> bound;
    std::vector<int64> stride;
    int64 size = 0;

    explicit BoxIndexer(std::vector<int64> b) : bound(std::move(b)) {
        stride.assign(bound.size(), 1);
        size = 1;
        for (size_t i = bound.size(); i-- > 0;) {
            if (bound[i] < 0) throw std::invalid_argument("bound coordinates must be >= 0");
            stride[i] = size;
            size = mul_checked(size, bound[i] + 1);
            if (size > kBoxCellCap) throw resource_error("multidegree box too large");
        }
    }
    bool inside(const std::vector<int64>& v) const {
        for (size_t i = 0; i < bound.size(); ++i)
            if (v[i] < 0 || v[i] > bound[i]) return false;
        return true;
    }
    int64 index(const std::vector<int64>& v) const {
        int64 idx = 0;
        for (size_t i = 0; i < v.size(); ++i) idx += v[i] * stride[i];
        return idx;
    }
    std::vector<int64> decode(int64 idx) const {
        std::vector<int64> v(bound.size());
        for (size_t i = 0; i < bound.size(); ++i) {
            v[i] = idx / stride[i];
            idx %= stride[i];
        }
        return v;
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void link(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// Fiber graph of lexicographically sorted factorizations: components and the
// first (lex-smallest) member of each.
struct FiberSummary {
    int components = 0;
    std::vector<size_t> reps; // by discovery order; reps[0] is the base
};

FiberSummary fiber_summary(const std::vector<std::vector<int64>>& facts, int ngens) {
    UnionFind uf(facts.size());
    for (int g = 0; g < ngens; ++g) {
        int prev = -1;
        for (size_t f = 0; f < facts.size(); ++f) {
            if (facts[f][static_cast<size_t>(g)] <= 0) continue;
            if (prev >= 0) uf.link(prev, static_cast<int>(f));
            prev = static_cast<int>(f);
        }
    }
    FiberSummary out;
    std::vector<int> root_seen;
    for (size_t f = 0; f < facts.size(); ++f) {
        int r = uf.find(static_cast<int>(f));
        if (std::find(root_seen.begin(), root_seen.end(), r) == root_seen.end()) {
            root_seen.push_back(r);
            out.reps.push_back(f);
        }
    }
    out.components = static_cast<int>(out.reps.size());
    return out;
}

int64 coord_sum(const std::vector<int64>& v) {
    int64 s = 0;
    for (int64 x : v) s = add_checked(s, x);
    return s;
}

std::string vec_string(const std::vector<int64>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

// Minimal-generator count of the ideal at multidegree d: components - 1.
int generator_count_at(const AffineSemigroup& S, const std::vector<int64>& d) {
    auto facts = affine_factorizations(S, d);
    if (facts.size() <= 1) return 0;
    return fiber_summary(facts, S.count()).components - 1;
}

std::vector<int64> multidegree_of(const AffineSemigroup& S, const std::vector<int64>& exps) {
    std::vector<int64> d(static_cast<size_t>(S.dim()), 0);
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw std::invalid_argument("negative exponent in monomial");
        for (size_t c = 0; c < d.size(); ++c)
            d[c] = add_checked(d[c], mul_checked(exps[i], S.gens[i][c]));
    }
    return d;
}

} // namespace

AffineSemigroup::AffineSemigroup(std::vector<std::vector<int64>> g) : gens(std::move(g)) {
    if (gens.empty()) throw std::invalid_argument("affine semigroup needs generators");
    m = static_cast<int>(gens[0].size());
    if (m == 0) throw std::invalid_argument("affine generators need at least one coordinate");
    std::set<std::vector<int64>> seen;
    for (const auto& v : gens) {
        if (static_cast<int>(v.size()) != m)
            throw std::invalid_argument("affine generators must share one dimension");
        bool nonzero = false;
        for (int64 x : v) {
            if (x < 0) throw std::invalid_argument("affine generators must be componentwise >= 0");
            if (x > 0) nonzero = true;
        }
        if (!nonzero) throw std::invalid_argument("affine generators must be nonzero");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate affine generator " + vec_string(v));
    }
}

std::vector<int64> AffineSemigroup::weights() const {
    std::vector<int64> w;
    w.reserve(gens.size());
    for (const auto& v : gens) w.push_back(coord_sum(v));
    return w;
}

std::vector<std::uint8_t> membership_box(const AffineSemigroup& S, const std::vector<int64>& bound) {
    if (static_cast<int>(bound.size()) != S.dim())
        throw std::invalid_argument("bound dimension mismatch");
    BoxIndexer box(bound);
    std::vector<std::uint8_t> table(static_cast<size_t>(box.size), 0);
    table[0] = 1;
    std::vector<int64> gen_off;
    for (const auto& g : S.gens)
        gen_off.push_back(box.inside(g) ? box.index(g) : -1);
    std::vector<int64> v(bound.size(), 0);
    for (int64 idx = 1; idx < box.size; ++idx) {
        // odometer increment, last coordinate fastest
        for (size_t i = bound.size(); i-- > 0;) {
            if (v[i] < bound[i]) {
                ++v[i];
                break;
            }
            v[i] = 0;
        }
        for (size_t t = 0; t < S.gens.size(); ++t) {
            if (gen_off[t] < 0) continue;
            bool fits = true;
            for (size_t c = 0; c < v.size(); ++c)
                if (v[c] < S.gens[t][c]) {
                    fits = false;
                    break;
                }
            if (fits && table[static_cast<size_t>(idx - gen_off[t])]) {
                table[static_cast<size_t>(idx)] = 1;
                break;
            }
        }
    }
    return table;
}

bool affine_contains(const AffineSemigroup& S, const std::vector<int64>& v) {
    if (static_cast<int>(v.size()) != S.dim())
        throw std::invalid_argument("vector dimension mismatch");
    for (int64 x : v)
        if (x < 0) throw std::invalid_argument("membership queries need componentwise >= 0");
    auto table = membership_box(S, v);
    return table.back() != 0;
}

std::vector<std::vector<int64>> affine_factorizations(const AffineSemigroup& S,
                                                      const std::vector<int64>& d,
                                                      int64 node_budget) {
    if (static_cast<int>(d.size()) != S.dim())
        throw std::invalid_argument("vector dimension mismatch");
    for (int64 x : d)
        if (x < 0) throw std::invalid_argument("factorization target must be nonnegative");
    std::vector<std::vector<int64>> out;
    std::vector<int64> current(S.gens.size(), 0);
    std::vector<int64> rem = d;
    int64 nodes = 0;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (++nodes > node_budget) throw resource_error("factorization enumeration too large");
        if (i == S.gens.size()) {
            for (int64 x : rem)
                if (x != 0) return;
            out.push_back(current);
            return;
        }
        const auto& g = S.gens[i];
        int64 cmax = INT64_MAX;
        for (size_t c = 0; c < g.size(); ++c)
            if (g[c] > 0) cmax = std::min(cmax, rem[c] / g[c]);
        for (int64 e = 0; e <= cmax; ++e) {
            current[i] = e;
            self(self, i + 1);
            for (size_t c = 0; c < g.size(); ++c) rem[c] -= g[c];
        }
        for (size_t c = 0; c < g.size(); ++c) rem[c] += g[c] * (cmax + 1);
        current[i] = 0;
    };
    rec(rec, 0);
    return out;
}

std::vector<Binomial> affine_fiber_generators(const AffineSemigroup& S,
                                              const std::vector<int64>& bound) {
    auto table = membership_box(S, bound);
    BoxIndexer box(bound);
    std::vector<Binomial> out;
    for (int64 idx = 1; idx < box.size; ++idx) {
        if (!table[static_cast<size_t>(idx)]) continue;
        std::vector<int64> d = box.decode(idx);
        auto facts = affine_factorizations(S, d);
        if (facts.size() <= 1) continue;
        FiberSummary fs = fiber_summary(facts, S.count());
        if (fs.components <= 1) continue;
        // reps[0] holds the overall lex-smallest factorization: the base.
        for (size_t r = 1; r < fs.reps.size(); ++r) {
            Binomial b;
            b.left = facts[fs.reps[r]];
            b.right = facts[fs.reps[0]];
            b.degree = coord_sum(d);
            out.push_back(std::move(b));
        }
    }
    return out;
}

AffineBetti affine_graded_betti(const AffineSemigroup& S, const std::vector<int64>& bound,
                                int64 field_char, bool parallel) {
    const int s = S.count();
    if (s > 20) throw resource_error("affine oracle limited to 20 generators");
    auto table = membership_box(S, bound);
    BoxIndexer box(bound);
    std::vector<std::vector<int64>> degrees;
    for (int64 idx = 1; idx < box.size; ++idx)
        if (table[static_cast<size_t>(idx)]) degrees.push_back(box.decode(idx));

    auto degree_betti = [&](const std::vector<int64>& d) -> std::vector<int64> {
        // Faces of the divisor complex: F with d - sum_F alpha_i in S.
        std::vector<std::vector<std::uint32_t>> faces(static_cast<size_t>(s) + 1);
        std::vector<int64> rest(d.size());
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << s); ++mask) {
            rest = d;
            bool ok = true;
            for (int t = 0; t < s && ok; ++t) {
                if (!(mask >> t & 1)) continue;
                for (size_t c = 0; c < rest.size(); ++c) {
                    rest[c] -= S.gens[static_cast<size_t>(t)][c];
                    if (rest[c] < 0) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok && table[static_cast<size_t>(box.index(rest))])
                faces[static_cast<size_t>(__builtin_popcount(mask))].push_back(mask);
        }
        if (!faces[static_cast<size_t>(s)].empty()) return {}; // full simplex: acyclic
        return reduced_homology(faces, field_char);
    };

    std::vector<std::vector<int64>> results(degrees.size());
#ifdef _OPENMP
    if (parallel) {
        const int threads = thread_budget();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(degrees.size()); ++i)
            results[static_cast<size_t>(i)] = degree_betti(degrees[static_cast<size_t>(i)]);
    } else
#else
    (void)parallel;
#endif
    {
        for (size_t i = 0; i < degrees.size(); ++i) results[i] = degree_betti(degrees[i]);
    }

    AffineBetti out;
    out.totals.assign(1, 1); // beta_0 = 1 at multidegree 0
    for (size_t i = 0; i < degrees.size(); ++i) {
        const auto& h = results[i];
        std::vector<int64> row;
        for (size_t k = 0; k < h.size(); ++k) {
            if (h[k] == 0) continue;
            if (row.size() < k + 1) row.resize(k + 1, 0);
            row[k] = h[k];
            if (out.totals.size() < k + 1) out.totals.resize(k + 1, 0);
            out.totals[k] += h[k];
        }
        if (!row.empty()) out.by_multidegree.emplace(degrees[i], std::move(row));
    }
    return out;
}

AffineGluingReport affine_gluing_verify(const AffineSemigroup& A, const AffineSemigroup& B,
                                        const std::optional<Binomial>& rho,
                                        const std::vector<int64>& bound) {
    if (A.dim() != B.dim()) throw std::invalid_argument("parts live in different dimensions");
    std::vector<std::vector<int64>> cg = A.gens;
    cg.insert(cg.end(), B.gens.begin(), B.gens.end());
    AffineSemigroup C(std::move(cg)); // validates disjointness of the parts

    BoxIndexer box(bound);
    auto tA = membership_box(A, bound);
    auto tB = membership_box(B, bound);
    auto tC = membership_box(C, bound);

    AffineGluingReport rep;
    rep.note = "per-multidegree generator-count comparison inside the box " + vec_string(bound) +
               ": evidence, not proof";

    auto check_with = [&](const std::vector<int64>& w, std::vector<std::string>* mism) {
        bool ok = true;
        for (int64 idx = 1; idx < box.size; ++idx) {
            if (!tC[static_cast<size_t>(idx)]) continue;
            std::vector<int64> d = box.decode(idx);
            int expected = (d == w ? 1 : 0);
            if (tA[static_cast<size_t>(idx)]) expected += generator_count_at(A, d);
            if (tB[static_cast<size_t>(idx)]) expected += generator_count_at(B, d);
            int actual = generator_count_at(C, d);
            if (actual != expected) {
                ok = false;
                if (mism && mism->size() < 32)
                    mism->push_back("multidegree " + vec_string(d) + ": expected " +
                                    std::to_string(expected) + " generators, found " +
                                    std::to_string(actual));
                else if (!mism)
                    return false;
            }
        }
        return ok;
    };

    if (rho) {
        if (static_cast<int>(rho->left.size()) != A.count() ||
            static_cast<int>(rho->right.size()) != B.count())
            throw std::invalid_argument("rho exponent vectors do not match the split");
        std::vector<int64> wl = multidegree_of(A, rho->left);
        std::vector<int64> wr = multidegree_of(B, rho->right);
        if (coord_sum(rho->left) == 0 || coord_sum(rho->right) == 0)
            throw std::invalid_argument("rho monomials must be nonconstant");
        if (wl != wr)
            throw std::invalid_argument("rho monomials have different multidegrees " +
                                        vec_string(wl) + " and " + vec_string(wr));
        if (!box.inside(wl))
            throw std::invalid_argument("rho multidegree lies outside the bound");
        rep.rho = *rho;
        rep.rho.degree = coord_sum(wl);
        rep.rho_multidegree = wl;
        rep.pass = check_with(wl, &rep.mismatches);
        return rep;
    }

    // Search: equal-multidegree candidates are the common nonzero elements of
    // <A> and <B> in the box, scanned in box order.
    rep.rho_searched = true;
    for (int64 idx = 1; idx < box.size; ++idx) {
        if (!tA[static_cast<size_t>(idx)] || !tB[static_cast<size_t>(idx)]) continue;
        std::vector<int64> w = box.decode(idx);
        if (!check_with(w, nullptr)) continue;
        rep.pass = true;
        rep.rho.left = affine_factorizations(A, w).front();
        rep.rho.right = affine_factorizations(B, w).front();
        rep.rho.degree = coord_sum(w);
        rep.rho_multidegree = w;
        return rep;
    }
    rep.pass = false;
    check_with(std::vector<int64>(static_cast<size_t>(A.dim()), -1), &rep.mismatches);
    rep.note += "; no equal-multidegree candidate for rho makes the counts match";
    return rep;
}

std::vector<int64> affine_betti_propagate(const std::vector<int64>& betti_a,
                                          const std::vector<int64>& betti_b) {
    if (betti_a.empty() || betti_b.empty() || betti_a[0] != 1 || betti_b[0] != 1)
        throw std::invalid_argument("Betti totals must start with beta_0 = 1");
    std::vector<int64> out = betti_from_split(betti_a, betti_b);
    // pd(C) = pd(A) + pd(B) + 1
    if (out.size() != betti_a.size() + betti_b.size() || out.back() == 0)
        throw invariant_error("projective dimension law violated by convolution");
    return out;
}

} // namespace glulib
