#include "glulib/complex.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "glulib/errors.hpp"
#include "glulib/linalg.hpp"

namespace glulib {

namespace {

int narrow_exp(int64 v) {
    if (v < 0 || v > (int64(1) << 30)) throw std::invalid_argument("exponent out of range");
    return static_cast<int>(v);
}

Exponents to_exps(const std::vector<int64>& v) {
    Exponents e(v.size());
    for (size_t i = 0; i < v.size(); ++i) e[i] = narrow_exp(v[i]);
    return e;
}

// Variables appearing on one side of a binomial.
std::vector<int> support(const std::vector<int64>& exps) {
    std::vector<int> s;
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0) s.push_back(static_cast<int>(i));
    return s;
}

Poly var_power(int nvars, int var, int64 exp) {
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(var)] = narrow_exp(exp);
    return Poly::monomial(std::move(e), 1);
}

bool has_constant_term(const Poly& p, int nvars) {
    return p.terms.count(Exponents(static_cast<size_t>(nvars), 0)) != 0;
}

} // namespace

Poly binomial_to_poly(const Binomial& b) {
    Poly p = Poly::monomial(to_exps(b.left), 1);
    p -= Poly::monomial(to_exps(b.right), 1);
    return p;
}

PolyMatrix matmul(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
    PolyMatrix z = PolyMatrix::zero(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            const Poly& xr = x.at(r, k);
            if (xr.is_zero()) continue;
            for (int c = 0; c < y.cols; ++c) {
                const Poly& yc = y.at(k, c);
                if (!yc.is_zero()) z.at(r, c) += xr * yc;
            }
        }
    return z;
}

ComplexReport verify_complex(const FreeComplex& F) {
    ComplexReport rep;
    auto note = [&rep](std::string s) {
        if (rep.violations.size() < 64) rep.violations.push_back(std::move(s));
    };
    const int len = F.length();
    if (static_cast<int>(F.diffs.size()) != len + 1)
        throw std::invalid_argument("verify_complex: diffs size mismatch");
    for (int k = 1; k <= len; ++k) {
        const PolyMatrix& d = F.diff(k);
        if (d.rows != F.rank(k - 1) || d.cols != F.rank(k))
            throw std::invalid_argument("verify_complex: differential shape mismatch");
        for (int r = 0; r < d.rows; ++r)
            for (int c = 0; c < d.cols; ++c) {
                const Poly& p = d.at(r, c);
                if (p.is_zero()) continue;
                int64 deg = -1;
                if (!is_homogeneous(p, F.ring, &deg) ||
                    deg != F.shifts[static_cast<size_t>(k)][static_cast<size_t>(c)] -
                               F.shifts[static_cast<size_t>(k - 1)][static_cast<size_t>(r)]) {
                    rep.homogeneous_ok = false;
                    note("inhomogeneous entry d" + std::to_string(k) + "(" + std::to_string(r) +
                         "," + std::to_string(c) + ")");
                }
                if (has_constant_term(p, F.ring.nvars())) {
                    rep.minimal_ok = false;
                    note("constant term in d" + std::to_string(k) + "(" + std::to_string(r) + "," +
                         std::to_string(c) + ")");
                }
            }
    }
    for (int k = 2; k <= len; ++k) {
        PolyMatrix z = matmul(F.diff(k - 1), F.diff(k));
        for (int r = 0; r < z.rows; ++r)
            for (int c = 0; c < z.cols; ++c)
                if (!z.at(r, c).is_zero()) {
                    rep.d2_ok = false;
                    note("d" + std::to_string(k - 1) + "*d" + std::to_string(k) + " nonzero at (" +
                         std::to_string(r) + "," + std::to_string(c) + ")");
                }
    }
    return rep;
}

FreeComplex koszul_complex(const WeightedRing& ring, const std::vector<Poly>& elements) {
    const int m = static_cast<int>(elements.size());
    if (m > 30) throw resource_error("koszul_complex: too many elements");
    std::vector<int64> degs(elements.size());
    for (size_t t = 0; t < elements.size(); ++t) {
        if (elements[t].is_zero() || !is_homogeneous(elements[t], ring, &degs[t]))
            throw std::invalid_argument("koszul_complex: elements must be nonzero homogeneous");
    }
    // Level k basis: bitmasks of popcount k, ascending.
    std::vector<std::vector<uint32_t>> masks(static_cast<size_t>(m) + 1);
    for (uint32_t f = 0; f < (uint32_t(1) << m); ++f)
        masks[static_cast<size_t>(__builtin_popcount(f))].push_back(f);

    FreeComplex F;
    F.ring = ring;
    F.shifts.resize(static_cast<size_t>(m) + 1);
    F.diffs.resize(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        for (uint32_t f : masks[static_cast<size_t>(k)]) {
            int64 s = 0;
            for (int t = 0; t < m; ++t)
                if (f >> t & 1) s = add_checked(s, degs[static_cast<size_t>(t)]);
            F.shifts[static_cast<size_t>(k)].push_back(s);
        }
    }
    for (int k = 1; k <= m; ++k) {
        const auto& lo = masks[static_cast<size_t>(k - 1)];
        const auto& hi = masks[static_cast<size_t>(k)];
        PolyMatrix d = PolyMatrix::zero(static_cast<int>(lo.size()), static_cast<int>(hi.size()));
        for (size_t c = 0; c < hi.size(); ++c) {
            uint32_t f = hi[c];
            int sign = 1;
            for (int t = 0; t < m; ++t) {
                if (!(f >> t & 1)) continue;
                uint32_t g = f & ~(uint32_t(1) << t);
                auto it = std::lower_bound(lo.begin(), lo.end(), g);
                int r = static_cast<int>(it - lo.begin());
                d.at(r, static_cast<int>(c)) +=
                    sign > 0 ? elements[static_cast<size_t>(t)] : -elements[static_cast<size_t>(t)];
                sign = -sign;
            }
        }
        F.diffs[static_cast<size_t>(k)] = std::move(d);
    }
    return F;
}

FreeComplex herzog_resolution(const WeightedRing& ring, const std::vector<Binomial>& gens3) {
    if (ring.nvars() != 3) throw std::invalid_argument("herzog_resolution: need 3 variables");
    if (gens3.size() != 3)
        throw std::invalid_argument("herzog_resolution: need exactly 3 generators (mu = 3)");
    // exps[v] = (pure exponent of x_{v+1}, exponents of the mixed side).
    std::vector<std::vector<int64>> mixed(3);
    std::vector<int64> pure(3, 0);
    for (const Binomial& b : gens3) {
        auto sl = support(b.left), sr = support(b.right);
        const std::vector<int64>*ps = nullptr, *ms = nullptr;
        if (sl.size() == 1 && sr.size() == 2) {
            ps = &b.left;
            ms = &b.right;
        } else if (sr.size() == 1 && sl.size() == 2) {
            ps = &b.right;
            ms = &b.left;
        } else {
            throw std::invalid_argument("herzog_resolution: generator not in 2x3-minor pattern");
        }
        int v = support(*ps)[0];
        if ((*ms)[static_cast<size_t>(v)] != 0 || pure[static_cast<size_t>(v)] != 0)
            throw std::invalid_argument("herzog_resolution: generator not in 2x3-minor pattern");
        pure[static_cast<size_t>(v)] = (*ps)[static_cast<size_t>(v)];
        mixed[static_cast<size_t>(v)] = *ms;
    }
    // x1^(a+f) - x2^d x3^c, x2^(b+d) - x1^a x3^e, x3^(c+e) - x1^f x2^b.
    int64 d = mixed[0][1], c = mixed[0][2];
    int64 a = mixed[1][0], e = mixed[1][2];
    int64 f = mixed[2][0], b = mixed[2][1];
    if (a < 1 || b < 1 || c < 1 || d < 1 || e < 1 || f < 1 || pure[0] != a + f ||
        pure[1] != b + d || pure[2] != c + e)
        throw std::invalid_argument("herzog_resolution: exponents not consistent with pattern");

    auto vp = [&](int var, int64 exp) { return var_power(3, var, exp); };
    Poly g1 = vp(2, c + e) - vp(0, f) * vp(1, b);
    Poly g2 = vp(0, a + f) - vp(1, d) * vp(2, c);
    Poly g3 = vp(1, b + d) - vp(0, a) * vp(2, e);

    FreeComplex F;
    F.ring = ring;
    F.shifts.resize(3);
    F.diffs.resize(3);
    F.shifts[0] = {0};
    PolyMatrix d1 = PolyMatrix::zero(1, 3);
    d1.at(0, 0) = g1;
    d1.at(0, 1) = g2;
    d1.at(0, 2) = g3;
    for (const Poly* g : {&g1, &g2, &g3}) {
        int64 deg = 0;
        is_homogeneous(*g, ring, &deg);
        F.shifts[1].push_back(deg);
    }
    PolyMatrix d2 = PolyMatrix::zero(3, 2);
    d2.at(0, 0) = vp(0, a);
    d2.at(0, 1) = vp(1, d);
    d2.at(1, 0) = vp(1, b);
    d2.at(1, 1) = vp(2, e);
    d2.at(2, 0) = vp(2, c);
    d2.at(2, 1) = vp(0, f);
    for (int j = 0; j < 2; ++j) {
        int64 deg = 0;
        is_homogeneous(d2.at(0, j), ring, &deg);
        F.shifts[2].push_back(add_checked(deg, F.shifts[1][0]));
    }
    F.diffs[1] = std::move(d1);
    F.diffs[2] = std::move(d2);
    PolyMatrix z = matmul(F.diffs[1], F.diffs[2]);
    for (const Poly& p : z.a)
        if (!p.is_zero()) throw invariant_error("herzog_resolution: d1*d2 != 0");
    return F;
}

std::optional<BresinskyShape> parse_bresinsky(const std::vector<Binomial>& gens5) {
    if (gens5.size() != 5) return std::nullopt;
    const size_t nv = gens5[0].left.size();
    if (nv != 4) return std::nullopt;

    // pure_of[v]: the generator whose pure side is x_{v+1}; mixed: the one
    // generator with two variables on each side.
    struct PureGen {
        int64 exp = 0;
        std::vector<int64> other; // exponents of the mixed side
    };
    std::array<std::optional<PureGen>, 4> pure_of;
    std::optional<std::pair<std::vector<int64>, std::vector<int64>>> mixed;
    for (const Binomial& g : gens5) {
        auto sl = support(g.left), sr = support(g.right);
        if (sl.size() == 2 && sr.size() == 2) {
            if (mixed) return std::nullopt;
            mixed = {g.left, g.right};
            continue;
        }
        const std::vector<int64>*ps = nullptr, *ms = nullptr;
        if (sl.size() == 1 && sr.size() == 2) {
            ps = &g.left;
            ms = &g.right;
        } else if (sr.size() == 1 && sl.size() == 2) {
            ps = &g.right;
            ms = &g.left;
        } else {
            return std::nullopt;
        }
        int v = support(*ps)[0];
        if ((*ms)[static_cast<size_t>(v)] != 0 || pure_of[static_cast<size_t>(v)])
            return std::nullopt;
        pure_of[static_cast<size_t>(v)] = PureGen{(*ps)[static_cast<size_t>(v)], *ms};
    }
    if (!mixed) return std::nullopt;
    for (const auto& p : pure_of)
        if (!p) return std::nullopt;

    // Search variable-role permutations in lexicographic order; first fit wins.
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        const int v1 = perm[0], v2 = perm[1], v3 = perm[2], v4 = perm[3];
        auto fits = [&](int purevar, int va, int vb) {
            const PureGen& p = *pure_of[static_cast<size_t>(purevar)];
            return support(p.other) == std::vector<int>{std::min(va, vb), std::max(va, vb)};
        };
        if (!fits(v1, v3, v4) || !fits(v3, v1, v2) || !fits(v4, v2, v3) || !fits(v2, v1, v4))
            continue;
        BresinskyShape s;
        s.role = {v1, v2, v3, v4};
        const PureGen &p1 = *pure_of[static_cast<size_t>(v1)], &p2 = *pure_of[static_cast<size_t>(v2)],
                      &p3 = *pure_of[static_cast<size_t>(v3)], &p4 = *pure_of[static_cast<size_t>(v4)];
        s.c1 = p1.exp;
        s.d13 = p1.other[static_cast<size_t>(v3)];
        s.d14 = p1.other[static_cast<size_t>(v4)];
        s.c3 = p3.exp;
        s.d31 = p3.other[static_cast<size_t>(v1)];
        s.d32 = p3.other[static_cast<size_t>(v2)];
        s.c4 = p4.exp;
        s.d42 = p4.other[static_cast<size_t>(v2)];
        s.d43 = p4.other[static_cast<size_t>(v3)];
        s.c2 = p2.exp;
        s.d21 = p2.other[static_cast<size_t>(v1)];
        s.d24 = p2.other[static_cast<size_t>(v4)];
        // The two-by-two generator must be x1^d21 x3^d43 - x2^d32 x4^d14
        // (either side order) in role coordinates.
        std::vector<int64> lhs(4, 0), rhs(4, 0);
        lhs[static_cast<size_t>(v1)] = s.d21;
        lhs[static_cast<size_t>(v3)] = s.d43;
        rhs[static_cast<size_t>(v2)] = s.d32;
        rhs[static_cast<size_t>(v4)] = s.d14;
        if ((mixed->first == lhs && mixed->second == rhs) ||
            (mixed->first == rhs && mixed->second == lhs))
            return s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

FreeComplex bresinsky_resolution(const WeightedRing& ring, const BresinskyShape& s) {
    if (ring.nvars() != 4) throw std::invalid_argument("bresinsky_resolution: need 4 variables");
    auto vp = [&](int role, int64 exp) {
        return var_power(4, s.role[static_cast<size_t>(role - 1)], exp);
    };
    Poly g1 = vp(1, s.c1) - vp(3, s.d13) * vp(4, s.d14);
    Poly g2 = vp(3, s.c3) - vp(1, s.d31) * vp(2, s.d32);
    Poly g3 = vp(4, s.c4) - vp(2, s.d42) * vp(3, s.d43);
    Poly g4 = vp(2, s.c2) - vp(1, s.d21) * vp(4, s.d24);
    Poly g5 = vp(1, s.d21) * vp(3, s.d43) - vp(2, s.d32) * vp(4, s.d14);
    std::array<Poly, 5> g{g1, g2, g3, g4, g5};

    FreeComplex F;
    F.ring = ring;
    F.shifts.resize(4);
    F.diffs.resize(4);
    F.shifts[0] = {0};
    PolyMatrix d1 = PolyMatrix::zero(1, 5);
    for (int j = 0; j < 5; ++j) {
        d1.at(0, j) = g[static_cast<size_t>(j)];
        int64 deg = 0;
        is_homogeneous(g[static_cast<size_t>(j)], ring, &deg);
        F.shifts[1].push_back(deg);
    }
    PolyMatrix phi = PolyMatrix::zero(5, 5);
    phi.at(0, 2) = vp(2, s.d32);
    phi.at(0, 3) = vp(3, s.d43);
    phi.at(0, 4) = vp(4, s.d24);
    phi.at(1, 2) = vp(1, s.d21);
    phi.at(1, 3) = vp(4, s.d14);
    phi.at(1, 4) = vp(2, s.d42);
    phi.at(2, 0) = -vp(2, s.d32);
    phi.at(2, 1) = -vp(1, s.d21);
    phi.at(2, 4) = vp(3, s.d13);
    phi.at(3, 0) = -vp(3, s.d43);
    phi.at(3, 1) = -vp(4, s.d14);
    phi.at(3, 4) = vp(1, s.d31);
    phi.at(4, 0) = -vp(4, s.d24);
    phi.at(4, 1) = -vp(2, s.d42);
    phi.at(4, 2) = -vp(3, s.d13);
    phi.at(4, 3) = -vp(1, s.d31);
    for (int j = 0; j < 5; ++j) {
        for (int r = 0; r < 5; ++r) {
            if (phi.at(r, j).is_zero()) continue;
            int64 deg = 0;
            is_homogeneous(phi.at(r, j), ring, &deg);
            F.shifts[2].push_back(add_checked(deg, F.shifts[1][static_cast<size_t>(r)]));
            break;
        }
    }
    PolyMatrix d3 = PolyMatrix::zero(5, 1);
    for (int i = 0; i < 5; ++i) d3.at(i, 0) = g[static_cast<size_t>(i)];
    {
        int64 deg = 0;
        is_homogeneous(g[0], ring, &deg);
        F.shifts[3].push_back(add_checked(deg, F.shifts[2][0]));
    }
    F.diffs[1] = std::move(d1);
    F.diffs[2] = std::move(phi);
    F.diffs[3] = std::move(d3);
    for (int k = 2; k <= 3; ++k) {
        PolyMatrix z = matmul(F.diff(k - 1), F.diff(k));
        for (const Poly& p : z.a)
            if (!p.is_zero())
                throw invariant_error("bresinsky_resolution: d" + std::to_string(k - 1) + "*d" +
                                      std::to_string(k) + " != 0");
    }
    return F;
}

FreeComplex import_complex(const FreeComplex& child, const WeightedRing& parent, int var_offset,
                           int64 degree_scale) {
    const int cn = child.ring.nvars();
    if (var_offset < 0 || var_offset + cn > parent.nvars())
        throw std::invalid_argument("import_complex: variable range out of bounds");
    for (int i = 0; i < cn; ++i)
        if (parent.weights[static_cast<size_t>(var_offset + i)] !=
            mul_checked(degree_scale, child.ring.weights[static_cast<size_t>(i)]))
            throw std::invalid_argument("import_complex: parent weights do not match scale");

    auto remap = [&](const Poly& p) {
        Poly q;
        for (const auto& [e, c] : p.terms) {
            Exponents ne(static_cast<size_t>(parent.nvars()), 0);
            for (int i = 0; i < cn; ++i) ne[static_cast<size_t>(var_offset + i)] = e[static_cast<size_t>(i)];
            q.terms.emplace(std::move(ne), c);
        }
        return q;
    };
    FreeComplex F;
    F.ring = parent;
    F.shifts.resize(child.shifts.size());
    F.diffs.resize(child.diffs.size());
    for (size_t k = 0; k < child.shifts.size(); ++k)
        for (int64 s : child.shifts[k]) F.shifts[k].push_back(mul_checked(s, degree_scale));
    for (size_t k = 1; k < child.diffs.size(); ++k) {
        const PolyMatrix& d = child.diffs[k];
        PolyMatrix nd = PolyMatrix::zero(d.rows, d.cols);
        for (int r = 0; r < d.rows; ++r)
            for (int c = 0; c < d.cols; ++c)
                if (!d.at(r, c).is_zero()) nd.at(r, c) = remap(d.at(r, c));
        F.diffs[k] = std::move(nd);
    }
    return F;
}

int tensor_position(const FreeComplex& A, const FreeComplex& B, int k, int i, int a, int b) {
    int pos = 0;
    const int lo = std::max(0, k - B.length());
    for (int ii = lo; ii < i; ++ii) pos += A.rank(ii) * B.rank(k - ii);
    return pos + a * B.rank(k - i) + b;
}

FreeComplex tensor_complex(const FreeComplex& A, const FreeComplex& B) {
    if (!(A.ring == B.ring))
        throw std::invalid_argument("tensor_complex: factors live in different rings");
    const int len = A.length() + B.length();
    FreeComplex T;
    T.ring = A.ring;
    T.shifts.resize(static_cast<size_t>(len) + 1);
    T.diffs.resize(static_cast<size_t>(len) + 1);
    for (int k = 0; k <= len; ++k) {
        for (int i = std::max(0, k - B.length()); i <= std::min(A.length(), k); ++i)
            for (int a = 0; a < A.rank(i); ++a)
                for (int b = 0; b < B.rank(k - i); ++b)
                    T.shifts[static_cast<size_t>(k)].push_back(
                        add_checked(A.shifts[static_cast<size_t>(i)][static_cast<size_t>(a)],
                                    B.shifts[static_cast<size_t>(k - i)][static_cast<size_t>(b)]));
    }
    for (int k = 1; k <= len; ++k) {
        PolyMatrix d = PolyMatrix::zero(static_cast<int>(T.shifts[static_cast<size_t>(k - 1)].size()),
                                        static_cast<int>(T.shifts[static_cast<size_t>(k)].size()));
        for (int i = std::max(0, k - B.length()); i <= std::min(A.length(), k); ++i) {
            const int j = k - i;
            for (int a = 0; a < A.rank(i); ++a)
                for (int b = 0; b < B.rank(j); ++b) {
                    const int col = tensor_position(A, B, k, i, a, b);
                    if (i >= 1) {
                        const PolyMatrix& dA = A.diff(i);
                        for (int r = 0; r < dA.rows; ++r) {
                            const Poly& p = dA.at(r, a);
                            if (p.is_zero()) continue;
                            d.at(tensor_position(A, B, k - 1, i - 1, r, b), col) += p;
                        }
                    }
                    if (j >= 1) {
                        const PolyMatrix& dB = B.diff(j);
                        const bool neg = (i % 2) != 0;
                        for (int r = 0; r < dB.rows; ++r) {
                            const Poly& p = dB.at(r, b);
                            if (p.is_zero()) continue;
                            Poly q = neg ? -p : p;
                            d.at(tensor_position(A, B, k - 1, i, a, r), col) += q;
                        }
                    }
                }
        }
        T.diffs[static_cast<size_t>(k)] = std::move(d);
    }
    return T;
}

FreeComplex mapping_cone_mul(const FreeComplex& G, const Poly& rho) {
    int64 rho_deg = -1;
    if (rho.is_zero() || !is_homogeneous(rho, G.ring, &rho_deg))
        throw std::invalid_argument("mapping_cone_mul: rho must be nonzero homogeneous");
    const int len = G.length() + 1;
    FreeComplex M;
    M.ring = G.ring;
    M.shifts.resize(static_cast<size_t>(len) + 1);
    M.diffs.resize(static_cast<size_t>(len) + 1);
    for (int k = 0; k <= len; ++k) {
        auto& sk = M.shifts[static_cast<size_t>(k)];
        if (k <= G.length())
            sk = G.shifts[static_cast<size_t>(k)];
        if (k - 1 >= 0)
            for (int64 s : G.shifts[static_cast<size_t>(k - 1)])
                sk.push_back(add_checked(s, rho_deg));
    }
    for (int k = 1; k <= len; ++k) {
        const int rG_k = G.rank(k), rG_k1 = G.rank(k - 1), rG_k2 = G.rank(k - 2);
        PolyMatrix d = PolyMatrix::zero(rG_k1 + rG_k2, rG_k + rG_k1);
        if (k <= G.length()) {
            const PolyMatrix& dG = G.diff(k);
            for (int r = 0; r < rG_k1; ++r)
                for (int c = 0; c < rG_k; ++c) d.at(r, c) = dG.at(r, c);
        }
        const Poly srho = (k - 1) % 2 == 0 ? rho : -rho;
        for (int b = 0; b < rG_k1; ++b) d.at(b, rG_k + b) = srho;
        if (k - 1 >= 1) {
            const PolyMatrix& dG = G.diff(k - 1);
            for (int r = 0; r < rG_k2; ++r)
                for (int b = 0; b < rG_k1; ++b) d.at(rG_k1 + r, rG_k + b) = dG.at(r, b);
        }
        M.diffs[static_cast<size_t>(k)] = std::move(d);
    }
    return M;
}

BettiTable betti_from_complex(const FreeComplex& F) {
    BettiTable t;
    for (int k = 0; k <= F.length(); ++k)
        for (int64 s : F.shifts[static_cast<size_t>(k)]) t.add(k, s, 1);
    return t;
}

ExactnessReport verify_exactness_probabilistic(const FreeComplex& F, int64 prime, int trials,
                                               std::uint64_t seed) {
    if (!is_prime(prime)) throw std::invalid_argument("verify_exactness: prime required");
    ExactnessReport rep;
    const int len = F.length();
    if (len == 0) {
        rep.certified = true;
        rep.detail = "complex has no differentials";
        return rep;
    }
    std::vector<int64> r(static_cast<size_t>(len) + 2, 0);
    for (int k = len; k >= 1; --k) {
        r[static_cast<size_t>(k)] = F.rank(k) - r[static_cast<size_t>(k) + 1];
        if (r[static_cast<size_t>(k)] < 0) {
            rep.impossible = true;
            rep.detail = "expected rank negative at position " + std::to_string(k);
            return rep;
        }
    }
    if (r[1] > F.rank(0)) {
        rep.impossible = true;
        rep.detail = "expected rank at position 1 exceeds rank of F_0";
        return rep;
    }
    rep.expected_ranks.assign(r.begin() + 1, r.begin() + 1 + len);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64> dist(0, prime - 1);
    auto powmod = [&](int64 base, int64 exp) {
        unsigned __int128 acc = 1, b = static_cast<unsigned __int128>((base % prime + prime) % prime);
        while (exp > 0) {
            if (exp & 1) acc = acc * b % static_cast<unsigned __int128>(prime);
            b = b * b % static_cast<unsigned __int128>(prime);
            exp >>= 1;
        }
        return static_cast<int64>(acc);
    };
    for (int trial = 0; trial < trials; ++trial) {
        rep.trials = trial + 1;
        std::vector<int64> point(static_cast<size_t>(F.ring.nvars()));
        for (auto& v : point) v = dist(rng);
        bool all_match = true;
        for (int k = 1; k <= len && !rep.impossible; ++k) {
            const PolyMatrix& d = F.diff(k);
            IntMatrix m = IntMatrix::zero(d.rows, d.cols);
            for (int row = 0; row < d.rows; ++row)
                for (int col = 0; col < d.cols; ++col) {
                    unsigned __int128 acc = 0;
                    for (const auto& [e, cf] : d.at(row, col).terms) {
                        unsigned __int128 term =
                            static_cast<unsigned __int128>((cf % prime + prime) % prime);
                        for (size_t v = 0; v < e.size(); ++v)
                            if (e[v] > 0)
                                term = term * static_cast<unsigned __int128>(powmod(point[v], e[v])) %
                                       static_cast<unsigned __int128>(prime);
                        acc = (acc + term) % static_cast<unsigned __int128>(prime);
                    }
                    m.at(row, col) = static_cast<int64>(acc);
                }
            int64 rk = rank_mod_p(m, prime);
            if (rk > r[static_cast<size_t>(k)]) {
                rep.impossible = true;
                rep.certified = false;
                rep.detail = "evaluated rank exceeds expected rank at position " + std::to_string(k);
                return rep;
            }
            if (rk < r[static_cast<size_t>(k)]) all_match = false;
        }
        if (all_match) {
            rep.successes += 1;
            rep.certified = true;
            rep.detail = "rank conditions certified by evaluation trial " + std::to_string(trial);
            return rep;
        }
    }
    rep.detail = "all trials degenerate: inconclusive";
    return rep;
}

} // namespace glulib
