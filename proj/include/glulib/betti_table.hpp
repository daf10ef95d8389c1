#pragma once

#include <map>
#include <utility>
#include <vector>

#include "glulib/arith.hpp"

namespace glulib {

// Graded Betti numbers beta_{i,j}: (homological degree, internal degree) ->
// multiplicity. Only nonzero entries are stored.
struct BettiTable {
    std::map<std::pair<int, int64>, int64> entries;

    void add(int i, int64 j, int64 mult) {
        if (mult == 0)
            return;
        auto key = std::make_pair(i, j);
        auto [it, fresh] = entries.emplace(key, mult);
        if (!fresh) {
            it->second += mult;
            if (it->second == 0)
                entries.erase(it);
        }
    }

    int pd() const {
        int p = 0;
        for (const auto& [k, v] : entries)
            p = std::max(p, k.first);
        return p;
    }

    std::vector<int64> totals() const {
        std::vector<int64> t(static_cast<size_t>(pd()) + 1, 0);
        for (const auto& [k, v] : entries)
            t[static_cast<size_t>(k.first)] += v;
        return t;
    }

    // Castelnuovo-Mumford regularity: max over entries of j - i.
    int64 regularity() const {
        int64 r = 0;
        for (const auto& [k, v] : entries)
            r = std::max(r, k.second - k.first);
        return r;
    }

    // Largest internal degree at the last homological step.
    int64 final_degree() const {
        int p = pd();
        int64 d = 0;
        for (const auto& [k, v] : entries)
            if (k.first == p)
                d = std::max(d, k.second);
        return d;
    }

    bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

} // namespace glulib
