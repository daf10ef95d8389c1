#include "glulib/linalg.hpp"

#include <cstdlib>

namespace glulib {

bool is_prime(int64 p) {
    if (p < 2) return false;
    for (int64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int rank_mod_p(IntMatrix m, int64 p) {
    if (!is_prime(p))
        throw std::invalid_argument("rank_mod_p needs a prime modulus");
    for (int64& v : m.a) {
        v %= p;
        if (v < 0) v += p;
    }
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int cc = 0; cc < m.cols; ++cc)
            std::swap(m.at(pivot, cc), m.at(rank, cc));
        // invert pivot via Fermat
        int64 inv = 1, base = m.at(rank, c) % p, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = (__int128)inv * base % p;
            base = (__int128)base * base % p;
            e >>= 1;
        }
        for (int cc = c; cc < m.cols; ++cc)
            m.at(rank, cc) = (__int128)m.at(rank, cc) * inv % p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            int64 f = m.at(r, c);
            if (f == 0) continue;
            for (int cc = c; cc < m.cols; ++cc) {
                int64 v = m.at(r, cc) - (__int128)f * m.at(rank, cc) % p;
                if (v < 0) v += p;
                m.at(r, cc) = v;
            }
        }
        ++rank;
    }
    return rank;
}

int rank_exact(IntMatrix m) {
    using i128 = __int128;
    const i128 lim = (i128(1) << 126);
    int rank = 0;
    std::vector<i128> a(m.a.begin(), m.a.end());
    auto at = [&](int r, int c) -> i128& { return a[static_cast<size_t>(r) * m.cols + c]; };
    i128 prev = 1;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int cc = 0; cc < m.cols; ++cc)
                std::swap(at(pivot, cc), at(rank, cc));
        i128 pv = at(rank, c);
        for (int r = rank + 1; r < m.rows; ++r) {
            i128 f = at(r, c);
            for (int cc = c; cc < m.cols; ++cc) {
                i128 num = pv * at(r, cc) - f * at(rank, cc);
                if (num >= lim || num <= -lim)
                    throw resource_error("exact elimination overflow; use a prime field");
                at(r, cc) = num / prev; // Bareiss: division is exact
            }
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

int rank_over_field(const IntMatrix& m, int64 p) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return p == 0 ? rank_exact(m) : rank_mod_p(m, p);
}

} // namespace glulib
