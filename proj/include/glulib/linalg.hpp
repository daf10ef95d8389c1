#pragma once

#include <cstdint>
#include <vector>

#include "glulib/arith.hpp"

namespace glulib {

// Dense row-major integer matrix; entries are reduced mod p or kept exact
// depending on the rank routine used.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int64> a; // rows*cols entries

    int64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix zero(int rows, int cols) {
        IntMatrix m;
        m.rows = rows;
        m.cols = cols;
        m.a.assign(static_cast<size_t>(rows) * cols, 0);
        return m;
    }
};

// Rank over GF(p), p an odd or even prime < 2^31. Gaussian elimination.
int rank_mod_p(IntMatrix m, int64 p);

// Exact rank over Q via fraction-free (Bareiss) elimination with 128-bit
// intermediates; throws resource_error if an intermediate would overflow.
int rank_exact(IntMatrix m);

// Rank dispatcher: p == 0 means exact rationals.
int rank_over_field(const IntMatrix& m, int64 p);

bool is_prime(int64 p);

} // namespace glulib
