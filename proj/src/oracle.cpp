#include "glulib/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "glulib/linalg.hpp"

namespace glulib {

int thread_budget() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("GLULIB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n)
            n = cap;
    }
    return n;
}

int64 betti_degree_bound(const SemigroupGens& C) {
    return add_checked(add_checked(frobenius(C), C.sum()), 1);
}

std::vector<int64> reduced_homology(const std::vector<std::vector<std::uint32_t>>& faces_by_card,
                                    int64 field_char) {
    size_t top = faces_by_card.size();
    std::vector<int> ranks(top + 1, 0); // ranks[k] = rank of boundary C_k -> C_{k-1}
    for (size_t k = 1; k < top; ++k) {
        const auto& rows = faces_by_card[k - 1];
        const auto& cols = faces_by_card[k];
        if (rows.empty() || cols.empty())
            continue;
        IntMatrix m = IntMatrix::zero(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            std::uint32_t face = cols[c];
            int sign = 1;
            for (std::uint32_t bits = face; bits;) {
                std::uint32_t v = bits & (~bits + 1); // lowest set bit
                bits ^= v;
                std::uint32_t sub = face ^ v;
                auto it = std::lower_bound(rows.begin(), rows.end(), sub);
                if (it == rows.end() || *it != sub)
                    throw invariant_error("complex not downward closed");
                m.at(static_cast<int>(it - rows.begin()), static_cast<int>(c)) = sign;
                sign = -sign;
            }
        }
        ranks[k] = rank_over_field(m, field_char);
    }
    std::vector<int64> h(top, 0);
    for (size_t k = 0; k < top; ++k) {
        int64 fk = static_cast<int64>(faces_by_card[k].size());
        h[k] = fk - ranks[k] - (k + 1 < ranks.size() ? ranks[k + 1] : 0);
        if (h[k] < 0)
            throw invariant_error("negative homology dimension");
    }
    return h;
}

std::vector<std::vector<std::uint32_t>> divisor_complex(const SemigroupGens& C, int64 j) {
    const auto& gens = C.gens();
    int n = C.dim();
    if (n > 20)
        throw resource_error("divisor complex limited to 20 generators");
    auto snap = C.membership(j);
    const auto& t = *snap;
    auto member = [&](int64 x) { return x >= 0 && t[static_cast<size_t>(x)] != 0; };
    std::vector<std::vector<std::uint32_t>> faces(static_cast<size_t>(n) + 1);
    if (!member(j))
        return faces; // void complex
    // Subset sums; prune via downward closure (F a face requires F minus its
    // top vertex to be one).
    std::vector<int64> sums(size_t(1) << n, 0);
    std::vector<std::uint8_t> ok(size_t(1) << n, 0);
    ok[0] = 1;
    faces[0].push_back(0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::uint32_t hi = std::uint32_t(31 - __builtin_clz(mask));
        std::uint32_t rest = mask ^ (std::uint32_t(1) << hi);
        sums[mask] = sums[rest] + gens[hi];
        if (!ok[rest] || sums[mask] > j || !member(j - sums[mask]))
            continue;
        ok[mask] = 1;
        faces[static_cast<size_t>(__builtin_popcount(mask))].push_back(mask);
    }
    return faces;
}

namespace {

// Per-degree homology at j; empty result for skipped degrees. total = sum of
// generators; degrees with j - total in C form full simplices (no homology).
std::vector<std::pair<int, int64>> degree_betti(const SemigroupGens& C, int64 j, int64 total,
                                                const std::vector<std::uint8_t>& table,
                                                int64 field_char) {
    std::vector<std::pair<int, int64>> out;
    auto member = [&](int64 x) { return x >= 0 && table[static_cast<size_t>(x)] != 0; };
    if (!member(j))
        return out;
    if (member(j - total))
        return out;
    auto faces = divisor_complex(C, j);
    auto h = reduced_homology(faces, field_char);
    for (size_t k = 0; k < h.size(); ++k)
        if (h[k] != 0)
            out.emplace_back(static_cast<int>(k), h[k]);
    return out;
}

int64 resolve_bound(const SemigroupGens& C, const OracleOptions& opts) {
    return opts.degree_bound >= 0 ? opts.degree_bound : betti_degree_bound(C);
}

} // namespace

BettiTable graded_betti_oracle_serial(const SemigroupGens& C, const OracleOptions& opts) {
    int64 bound = resolve_bound(C, opts);
    int64 total = C.sum();
    auto snap = C.membership(bound + total);
    BettiTable table;
    for (int64 j = 0; j <= bound; ++j)
        for (auto [i, m] : degree_betti(C, j, total, *snap, opts.field_char))
            table.add(i, j, m);
    return table;
}

BettiTable graded_betti_oracle(const SemigroupGens& C, const OracleOptions& opts) {
    if (!opts.parallel)
        return graded_betti_oracle_serial(C, opts);
    int64 bound = resolve_bound(C, opts);
    int64 total = C.sum();
    auto snap = C.membership(bound + total);
    const auto& tab = *snap;
    std::vector<std::vector<std::pair<int, int64>>> per_degree(static_cast<size_t>(bound) + 1);
#ifdef _OPENMP
    int threads = thread_budget();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (int64 j = 0; j <= bound; ++j)
        per_degree[static_cast<size_t>(j)] = degree_betti(C, j, total, tab, opts.field_char);
#else
    for (int64 j = 0; j <= bound; ++j)
        per_degree[static_cast<size_t>(j)] = degree_betti(C, j, total, tab, opts.field_char);
#endif
    BettiTable table;
    for (int64 j = 0; j <= bound; ++j)
        for (auto [i, m] : per_degree[static_cast<size_t>(j)])
            table.add(i, j, m);
    return table;
}

std::vector<std::vector<int64>> factorizations(const SemigroupGens& C, int64 j,
                                               int64 node_budget) {
    const auto& gens = C.gens();
    int n = C.dim();
    std::vector<std::vector<int64>> out;
    std::vector<int64> cur(static_cast<size_t>(n), 0);
    int64 visited = 0;
    // Lexicographic order falls out of scanning e[0] ascending first.
    auto rec = [&](auto&& self, int i, int64 rest) -> void {
        if (++visited > node_budget)
            throw resource_error("factorization enumeration exceeded node budget");
        if (i == n - 1) {
            if (rest % gens[static_cast<size_t>(i)] == 0) {
                cur[static_cast<size_t>(i)] = rest / gens[static_cast<size_t>(i)];
                out.push_back(cur);
                cur[static_cast<size_t>(i)] = 0;
            }
            return;
        }
        for (int64 e = 0; e * gens[static_cast<size_t>(i)] <= rest; ++e) {
            cur[static_cast<size_t>(i)] = e;
            self(self, i + 1, rest - e * gens[static_cast<size_t>(i)]);
        }
        cur[static_cast<size_t>(i)] = 0;
    };
    if (n == 1) {
        if (j % gens[0] == 0)
            out.push_back({j / gens[0]});
        return out;
    }
    rec(rec, 0, j);
    return out;
}

namespace {

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
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// Component count of the divisor complex's 1-skeleton; cheap disconnection
// prefilter for the fiber-graph scan.
int skeleton_components(const SemigroupGens& C, int64 j, const std::vector<std::uint8_t>& table) {
    const auto& gens = C.gens();
    int n = C.dim();
    auto member = [&](int64 x) { return x >= 0 && table[static_cast<size_t>(x)] != 0; };
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
        if (member(j - gens[static_cast<size_t>(v)]))
            verts.push_back(v);
    if (verts.empty())
        return 0;
    UnionFind uf(verts.size());
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (member(j - gens[static_cast<size_t>(verts[a])] - gens[static_cast<size_t>(verts[b])]))
                uf.unite(static_cast<int>(a), static_cast<int>(b));
    int comps = 0;
    for (size_t a = 0; a < verts.size(); ++a)
        if (uf.find(static_cast<int>(a)) == static_cast<int>(a))
            ++comps;
    return comps;
}

} // namespace

std::vector<Binomial> minimal_generators_of_ideal(const SemigroupGens& C, int64 bound) {
    if (bound < 0)
        bound = betti_degree_bound(C);
    int64 total = C.sum();
    auto snap = C.membership(bound + total);
    const auto& tab = *snap;
    auto member = [&](int64 x) { return x >= 0 && tab[static_cast<size_t>(x)] != 0; };
    std::vector<Binomial> out;
    for (int64 j = 1; j <= bound; ++j) {
        if (!member(j))
            continue;
        if (member(j - total))
            continue; // full simplex, connected
        int pre = skeleton_components(C, j, tab);
        if (pre <= 1)
            continue;
        auto facts = factorizations(C, j);
        UnionFind uf(facts.size());
        for (int v = 0; v < C.dim(); ++v) {
            int prev = -1;
            for (size_t f = 0; f < facts.size(); ++f) {
                if (facts[f][static_cast<size_t>(v)] == 0)
                    continue;
                if (prev >= 0)
                    uf.unite(prev, static_cast<int>(f));
                prev = static_cast<int>(f);
            }
        }
        // lexicographically smallest factorization per component
        std::map<int, size_t> reps;
        for (size_t f = 0; f < facts.size(); ++f) {
            int root = uf.find(static_cast<int>(f));
            auto [it, fresh] = reps.emplace(root, f);
            if (!fresh && facts[f] < facts[it->second])
                it->second = f;
        }
        if (static_cast<int>(reps.size()) != pre)
            throw invariant_error("fiber components disagree with divisor complex at degree " +
                                  std::to_string(j));
        size_t base = facts.size();
        for (const auto& [root, f] : reps)
            if (base == facts.size() || facts[f] < facts[base])
                base = f;
        for (const auto& [root, f] : reps) {
            if (f == base)
                continue;
            Binomial b;
            b.left = facts[f];
            b.right = facts[base];
            b.degree = j;
            out.push_back(std::move(b));
        }
    }
    return out;
}

std::vector<std::uint8_t> hilbert_function_oracle(const SemigroupGens& C, int64 limit) {
    auto snap = C.membership(limit);
    return std::vector<std::uint8_t>(snap->begin(), snap->begin() + limit + 1);
}

} // namespace glulib
