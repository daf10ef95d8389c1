#pragma once

#include <map>
#include <string>
#include <vector>

#include "glulib/arith.hpp"

namespace glulib {

using Exponents = std::vector<int>;

// Polynomial ring with one weight per variable (weighted degrees are the
// semigroup element values).
struct WeightedRing {
    std::vector<std::string> names;
    std::vector<int64> weights;

    int nvars() const { return static_cast<int>(weights.size()); }
    int64 degree(const Exponents& e) const;
    bool operator==(const WeightedRing& o) const = default;
};

// x1..xn with the given weights.
WeightedRing make_ring(const std::vector<int64>& weights);
// x1..xp (weights wa) followed by y1..yq (weights wb).
WeightedRing make_ring_xy(const std::vector<int64>& wa, const std::vector<int64>& wb);

// Sparse integer-coefficient polynomial; exponent vectors all share the
// ring's variable count.
struct Poly {
    std::map<Exponents, int64> terms;

    static Poly zero() { return Poly{}; }
    static Poly constant(int nvars, int64 c);
    static Poly monomial(Exponents e, int64 c = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_constant_nonzero() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(int64 c) const;
    bool operator==(const Poly& o) const = default;
};

// True when every term has the same weighted degree; degree_out receives it
// (zero polynomial: degree -1, vacuously homogeneous).
bool is_homogeneous(const Poly& p, const WeightedRing& ring, int64* degree_out = nullptr);

// Canonical rendering, terms in descending lexicographic exponent order.
std::string to_string(const Poly& p, const WeightedRing& ring);

} // namespace glulib
