#include "glulib/gluing.hpp"

#include <algorithm>
#include <set>

namespace glulib {

std::vector<int64> GluingSplit::part1() const {
    std::vector<int64> p;
    p.reserve(A.gens().size());
    for (int64 a : A.gens())
        p.push_back(mul_checked(k1, a));
    return p;
}

std::vector<int64> GluingSplit::part2() const {
    std::vector<int64> p;
    p.reserve(B.gens().size());
    for (int64 b : B.gens())
        p.push_back(mul_checked(k2, b));
    return p;
}

std::optional<std::vector<int64>> lex_smallest_representation(const std::vector<int64>& gens,
                                                              int64 target) {
    if (target < 0)
        return std::nullopt;
    size_t n = gens.size();
    // reachable[i] = membership table of the semigroup generated by the
    // suffix gens[i..]; reachable[n] covers only 0.
    std::vector<std::vector<std::uint8_t>> reachable(n + 1);
    reachable[n].assign(static_cast<size_t>(target) + 1, 0);
    reachable[n][0] = 1;
    for (size_t i = n; i-- > 0;) {
        reachable[i] = reachable[i + 1];
        int64 g = gens[i];
        for (int64 x = g; x <= target; ++x)
            if (reachable[i][static_cast<size_t>(x - g)])
                reachable[i][static_cast<size_t>(x)] = 1;
    }
    if (!reachable[0][static_cast<size_t>(target)])
        return std::nullopt;
    std::vector<int64> e(n, 0);
    int64 r = target;
    for (size_t i = 0; i < n; ++i) {
        for (int64 k = 0;; ++k) {
            int64 rest = r - k * gens[i];
            if (rest < 0)
                throw invariant_error("representation search lost feasibility");
            if (reachable[i + 1][static_cast<size_t>(rest)]) {
                e[i] = k;
                r = rest;
                break;
            }
        }
    }
    return e;
}

namespace {

std::vector<int64> divide_all(const std::vector<int64>& v, int64 d) {
    std::vector<int64> out;
    out.reserve(v.size());
    for (int64 x : v)
        out.push_back(x / d);
    return out;
}

void require_root(const SemigroupGens& C) {
    if (C.gcd() != 1)
        throw std::invalid_argument("gluing search requires gcd 1");
    if (!C.minimal())
        throw std::invalid_argument("gluing search requires a minimal generating set");
}

} // namespace

std::optional<GluingSplit> check_split(const SemigroupGens& C, const std::vector<int64>& part1,
                                       const std::vector<int64>& part2) {
    require_root(C);
    if (part1.empty() || part2.empty())
        throw std::invalid_argument("both parts must be non-empty");
    std::vector<int64> merged;
    merged.reserve(part1.size() + part2.size());
    merged.insert(merged.end(), part1.begin(), part1.end());
    merged.insert(merged.end(), part2.begin(), part2.end());
    std::sort(merged.begin(), merged.end());
    if (merged != C.gens())
        throw std::invalid_argument("parts do not partition the generators");

    if (part1.size() == 1 && part2.size() == 1)
        return std::nullopt; // dimension-2 base case stays terminal

    int64 k1 = 0, k2 = 0;
    for (int64 x : part1)
        k1 = gcd64(k1, x);
    for (int64 x : part2)
        k2 = gcd64(k2, x);
    if (gcd64(k1, k2) != 1)
        return std::nullopt;

    SemigroupGens A(divide_all(part1, k1));
    SemigroupGens B(divide_all(part2, k2));
    if (!A.minimal() || !B.minimal())
        return std::nullopt;

    auto in_set = [](const std::vector<int64>& v, int64 x) {
        return std::binary_search(v.begin(), v.end(), x);
    };
    if (in_set(B.gens(), k1) || !B.contains(k1))
        return std::nullopt;
    if (in_set(A.gens(), k2) || !A.contains(k2))
        return std::nullopt;

    auto alpha = lex_smallest_representation(A.gens(), k2);
    auto beta = lex_smallest_representation(B.gens(), k1);
    if (!alpha || !beta)
        throw invariant_error("membership held but representation search failed");
    return GluingSplit(k1, std::move(A), std::move(*alpha), k2, std::move(B), std::move(*beta));
}

std::vector<GluingSplit> find_gluings(const SemigroupGens& C) {
    require_root(C);
    const auto& gens = C.gens();
    size_t n = gens.size();
    std::vector<GluingSplit> found;
    if (n < 2)
        return found;
    // The part holding the smallest generator is the B side; enumerate the
    // complementary part over subsets of the remaining generators.
    std::vector<int64> rest(gens.begin() + 1, gens.end());
    size_t m = n - 1;
    std::vector<std::pair<std::vector<int64>, size_t>> order;
    for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
        std::vector<int64> part1;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t(1) << i))
                part1.push_back(rest[i]);
        order.emplace_back(std::move(part1), mask);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [part1, mask] : order) {
        std::vector<int64> part2{gens.front()};
        for (size_t i = 0; i < m; ++i)
            if (!(mask & (size_t(1) << i)))
                part2.push_back(rest[i]);
        std::sort(part2.begin(), part2.end());
        if (auto split = check_split(C, part1, part2))
            found.push_back(std::move(*split));
    }
    return found;
}

std::vector<GluingSplit> simple_splits(const SemigroupGens& C) {
    std::vector<GluingSplit> out;
    for (const auto& s : find_gluings(C)) {
        if (s.A.dim() == 1)
            out.push_back(s);
        else if (s.B.dim() == 1)
            out.push_back(s.swapped());
    }
    return out;
}

DecompTree decomposition_tree(const SemigroupGens& C, SplitStrategy strategy) {
    require_root(C);
    DecompTree t(C);
    if (C.dim() == 1) {
        t.leaf_kind = LeafKind::dim1;
        return t;
    }
    if (C.dim() == 2) {
        t.leaf_kind = LeafKind::dim2;
        return t;
    }
    std::vector<GluingSplit> splits = find_gluings(C);
    if (splits.empty()) {
        t.leaf_kind = LeafKind::indecomposable;
        return t;
    }
    GluingSplit chosen = splits.front();
    if (strategy == SplitStrategy::prefer_simple) {
        for (const auto& s : splits)
            if (s.is_simple()) {
                chosen = s.A.dim() == 1 ? s : s.swapped();
                break;
            }
    }
    t.children.push_back(decomposition_tree(chosen.A, strategy));
    t.children.push_back(decomposition_tree(chosen.B, strategy));
    t.split = std::move(chosen);
    return t;
}

std::vector<DecompTree> all_decomposition_trees(const SemigroupGens& C, int cap) {
    require_root(C);
    if (cap <= 0)
        return {};
    DecompTree base(C);
    if (C.dim() <= 2) {
        base.leaf_kind = C.dim() == 1 ? LeafKind::dim1 : LeafKind::dim2;
        return {base};
    }
    std::vector<GluingSplit> splits = find_gluings(C);
    if (splits.empty()) {
        base.leaf_kind = LeafKind::indecomposable;
        return {base};
    }
    std::vector<DecompTree> out;
    for (const auto& s : splits) {
        auto lefts = all_decomposition_trees(s.A, cap);
        auto rights = all_decomposition_trees(s.B, cap);
        for (const auto& lt : lefts) {
            for (const auto& rt : rights) {
                DecompTree t(C);
                t.split = s;
                t.children = {lt, rt};
                out.push_back(std::move(t));
                if (static_cast<int>(out.size()) >= cap)
                    return out;
            }
        }
    }
    return out;
}

Binomial rho_binomial(const GluingSplit& split) {
    Binomial b;
    b.left = split.alpha;
    b.right = split.beta;
    b.degree = mul_checked(split.k1, split.k2);
    return b;
}

ArithmeticReport is_arithmetic_and_decomposable(const SemigroupGens& C) {
    require_root(C);
    ArithmeticReport r;
    const auto& g = C.gens();
    size_t n = g.size();
    if (n == 1) {
        r.is_arithmetic = true;
    } else {
        int64 d = g[1] - g[0];
        r.is_arithmetic = true;
        for (size_t i = 1; i + 1 < n; ++i)
            if (g[i + 1] - g[i] != d) {
                r.is_arithmetic = false;
                break;
            }
        if (r.is_arithmetic)
            r.diff = d;
    }
    r.is_decomposable = !find_gluings(C).empty();
    if (r.is_arithmetic && n == 3 && g[0] % 2 == 0) {
        int64 c0 = g[0] / 2;
        int64 d = r.diff;
        r.predicted_decomposable = (d % 2 == 1) && gcd64(c0, d) == 1;
    }
    r.consistent = !r.is_arithmetic || (r.is_decomposable == r.predicted_decomposable);
    return r;
}

} // namespace glulib
