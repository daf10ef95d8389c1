#include "glulib/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace glulib {

int64 gcd64(int64 a, int64 b) {
    while (b != 0) {
        int64 t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

int64 mul_checked(int64 a, int64 b) {
    int64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw resource_error("64-bit overflow in multiplication");
    return r;
}

int64 add_checked(int64 a, int64 b) {
    int64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw resource_error("64-bit overflow in addition");
    return r;
}

namespace {

std::vector<int64> normalize_gens(std::vector<int64> gens) {
    if (gens.empty())
        throw std::invalid_argument("semigroup needs at least one generator");
    for (int64 g : gens)
        if (g <= 0)
            throw std::invalid_argument("generators must be positive, got " + std::to_string(g));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

// DP table of <gens> memberships for 0..limit inclusive.
std::vector<std::uint8_t> build_table(const std::vector<int64>& gens, int64 limit) {
    std::vector<std::uint8_t> t(static_cast<size_t>(limit) + 1, 0);
    t[0] = 1;
    for (int64 x = 1; x <= limit; ++x) {
        for (int64 g : gens) {
            if (g > x) break; // gens sorted
            if (t[static_cast<size_t>(x - g)]) {
                t[static_cast<size_t>(x)] = 1;
                break;
            }
        }
    }
    return t;
}

} // namespace

MembershipCache::MembershipCache(std::vector<int64> gens) : gens_(std::move(gens)) {}

std::shared_ptr<const std::vector<std::uint8_t>> MembershipCache::snapshot(int64 limit) const {
    if (limit < 0)
        limit = 0;
    std::lock_guard<std::mutex> lock(mu_);
    if (!table_ || static_cast<int64>(table_->size()) <= limit) {
        int64 cap = table_ ? static_cast<int64>(table_->size()) : 256;
        while (cap <= limit)
            cap = mul_checked(cap, 2);
        if (cap > (int64(1) << 34))
            throw resource_error("membership table would exceed size budget");
        table_ = std::make_shared<const std::vector<std::uint8_t>>(build_table(gens_, cap - 1));
    }
    return table_;
}

bool MembershipCache::contains(int64 x) const {
    if (x < 0)
        throw std::invalid_argument("membership query for negative value");
    auto snap = snapshot(x);
    return (*snap)[static_cast<size_t>(x)] != 0;
}

SemigroupGens::SemigroupGens(std::vector<int64> gens) : gens_(normalize_gens(std::move(gens))) {
    gcd_ = 0;
    for (int64 g : gens_)
        gcd_ = gcd64(gcd_, g);
    cache_ = std::make_shared<MembershipCache>(gens_);
    minimal_ = (minimal_generators(gens_) == gens_);
}

int64 SemigroupGens::sum() const {
    int64 s = 0;
    for (int64 g : gens_)
        s = add_checked(s, g);
    return s;
}

bool SemigroupGens::contains(int64 x) const { return cache_->contains(x); }

std::shared_ptr<const std::vector<std::uint8_t>> SemigroupGens::membership(int64 limit) const {
    return cache_->snapshot(limit);
}

std::vector<int64> minimal_generators(const std::vector<int64>& raw) {
    std::vector<int64> gens = normalize_gens(raw);
    int64 d = 0;
    for (int64 g : gens)
        d = gcd64(d, g);
    if (d > 1) {
        std::vector<int64> scaled;
        scaled.reserve(gens.size());
        for (int64 g : gens)
            scaled.push_back(g / d);
        std::vector<int64> mins = minimal_generators(scaled);
        for (int64& g : mins)
            g = mul_checked(g, d);
        return mins;
    }
    // gcd 1: the minimal generators are the atoms of S = <gens>, i.e. the
    // nonzero elements that are not a sum of two nonzero elements. Every
    // atom lies in any generating set, so scanning gens suffices.
    int64 maxg = gens.back();
    std::vector<std::uint8_t> table = build_table(gens, maxg);
    std::vector<int64> result;
    for (int64 g : gens) {
        bool decomposes = false;
        for (int64 a = 1; a < g && !decomposes; ++a)
            if (table[static_cast<size_t>(a)] && table[static_cast<size_t>(g - a)])
                decomposes = true;
        if (!decomposes)
            result.push_back(g);
    }
    return result;
}

int64 frobenius(const SemigroupGens& S) {
    if (S.gcd() != 1)
        throw std::domain_error("frobenius requires gcd 1");
    int64 m = S.gens().front();
    // Grow until the last m entries are all members; beyond that point every
    // value is a member (add m repeatedly).
    int64 limit = std::max<int64>(m * S.gens().back(), 2 * m);
    for (;;) {
        auto snap = S.membership(limit);
        const auto& t = *snap;
        int64 hi = static_cast<int64>(t.size()) - 1;
        bool tail_full = true;
        for (int64 x = hi - m + 1; x <= hi; ++x)
            if (!t[static_cast<size_t>(x)]) {
                tail_full = false;
                break;
            }
        if (tail_full) {
            for (int64 x = hi; x >= 0; --x)
                if (!t[static_cast<size_t>(x)])
                    return x;
            return -1; // S = N
        }
        limit = mul_checked(limit, 2);
    }
}

std::vector<int64> apery_set(const SemigroupGens& S, int64 m) {
    if (S.gcd() != 1)
        throw std::domain_error("apery_set requires gcd 1");
    if (m <= 0 || !S.contains(m))
        throw std::invalid_argument("apery_set needs m in S, m > 0");
    int64 f = frobenius(S);
    int64 hi = f + m; // every residue is realized by f+1 .. f+m
    auto snap = S.membership(hi);
    const auto& t = *snap;
    std::vector<int64> ap(static_cast<size_t>(m), -1);
    for (int64 x = 0; x <= hi; ++x) {
        if (!t[static_cast<size_t>(x)]) continue;
        size_t r = static_cast<size_t>(x % m);
        if (ap[r] < 0)
            ap[r] = x;
    }
    return ap;
}

std::vector<int64> pseudo_frobenius(const SemigroupGens& S) {
    if (S.gcd() != 1)
        throw std::domain_error("pseudo_frobenius requires gcd 1");
    int64 f = frobenius(S);
    if (f < 0)
        return {-1}; // S = N
    auto snap = S.membership(f + S.gens().back());
    const auto& t = *snap;
    auto in = [&](int64 x) { return t[static_cast<size_t>(x)] != 0; };
    std::vector<int64> pf;
    for (int64 x = 1; x <= f; ++x) {
        if (in(x)) continue;
        bool ok = true;
        // x + s in S for all s in S\{0} iff x + g in S for every generator g.
        for (int64 g : S.gens())
            if (!in(x + g)) {
                ok = false;
                break;
            }
        if (ok)
            pf.push_back(x);
    }
    return pf;
}

std::vector<int64> gaps(const SemigroupGens& S) {
    if (S.gcd() != 1)
        throw std::domain_error("gaps requires gcd 1");
    int64 f = frobenius(S);
    std::vector<int64> out;
    if (f < 0)
        return out;
    auto snap = S.membership(f);
    for (int64 x = 1; x <= f; ++x)
        if (!(*snap)[static_cast<size_t>(x)])
            out.push_back(x);
    return out;
}

} // namespace glulib
