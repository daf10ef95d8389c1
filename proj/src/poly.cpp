#include "glulib/poly.hpp"

#include <algorithm>

namespace glulib {

int64 WeightedRing::degree(const Exponents& e) const {
    if (e.size() != weights.size())
        throw std::invalid_argument("exponent vector length mismatch");
    int64 d = 0;
    for (size_t i = 0; i < e.size(); ++i)
        d = add_checked(d, mul_checked(weights[i], e[i]));
    return d;
}

WeightedRing make_ring(const std::vector<int64>& weights) {
    WeightedRing r;
    r.weights = weights;
    for (size_t i = 0; i < weights.size(); ++i)
        r.names.push_back("x" + std::to_string(i + 1));
    return r;
}

WeightedRing make_ring_xy(const std::vector<int64>& wa, const std::vector<int64>& wb) {
    WeightedRing r;
    for (size_t i = 0; i < wa.size(); ++i) {
        r.names.push_back("x" + std::to_string(i + 1));
        r.weights.push_back(wa[i]);
    }
    for (size_t i = 0; i < wb.size(); ++i) {
        r.names.push_back("y" + std::to_string(i + 1));
        r.weights.push_back(wb[i]);
    }
    return r;
}

Poly Poly::constant(int nvars, int64 c) {
    Poly p;
    if (c != 0)
        p.terms[Exponents(static_cast<size_t>(nvars), 0)] = c;
    return p;
}

Poly Poly::monomial(Exponents e, int64 c) {
    Poly p;
    if (c != 0)
        p.terms[std::move(e)] = c;
    return p;
}

bool Poly::is_constant_nonzero() const {
    if (terms.size() != 1)
        return false;
    const auto& e = terms.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms) {
        auto [it, fresh] = terms.emplace(e, c);
        if (!fresh) {
            it->second = add_checked(it->second, c);
            if (it->second == 0)
                terms.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += o.scaled(-1); }

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            Exponents e(ea.size());
            if (ea.size() != eb.size())
                throw std::invalid_argument("multiplying polynomials from different rings");
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            int64 c = mul_checked(ca, cb);
            auto [it, fresh] = r.terms.emplace(std::move(e), c);
            if (!fresh) {
                it->second = add_checked(it->second, c);
                if (it->second == 0)
                    r.terms.erase(it);
            }
        }
    return r;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(int64 c) const {
    Poly r;
    if (c == 0)
        return r;
    for (const auto& [e, v] : terms)
        r.terms[e] = mul_checked(v, c);
    return r;
}

bool is_homogeneous(const Poly& p, const WeightedRing& ring, int64* degree_out) {
    if (p.is_zero()) {
        if (degree_out)
            *degree_out = -1;
        return true;
    }
    int64 d = ring.degree(p.terms.begin()->first);
    for (const auto& [e, c] : p.terms)
        if (ring.degree(e) != d)
            return false;
    if (degree_out)
        *degree_out = d;
    return true;
}

std::string to_string(const Poly& p, const WeightedRing& ring) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        int64 a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += ring.names[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += std::to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += std::to_string(a) + "*" + mono;
    }
    return out;
}

} // namespace glulib
