#pragma once

// Brute-force reference implementations used to check the library. They only
// read the cover list of a poset and recompute everything else from
// definitions: order by transitive closure, ideals by subset filtering,
// rowmotion as min of the complement.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rowmotion/poset.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct Order {
    std::size_t n = 0;
    std::vector<std::vector<bool>> le;  // le[x][y]: x <= y

    explicit Order(const rowmotion::Poset& p) : n(p.size()), le(n, std::vector<bool>(n, false)) {
        if (n > 62) throw std::invalid_argument("oracle limited to 62 elements");
        for (std::size_t x = 0; x < n; ++x) le[x][x] = true;
        for (const auto& [lo, hi] : p.covers()) le[lo][hi] = true;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (le[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (le[k][j]) le[i][j] = true;
    }

    bool is_ideal(Mask s) const {
        for (std::size_t y = 0; y < n; ++y)
            if (s >> y & 1)
                for (std::size_t x = 0; x < n; ++x)
                    if (le[x][y] && !(s >> x & 1)) return false;
        return true;
    }

    Mask maximal(Mask s) const {
        Mask out = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (!(s >> x & 1)) continue;
            bool top = true;
            for (std::size_t y = 0; y < n && top; ++y)
                if (y != x && (s >> y & 1) && le[x][y]) top = false;
            if (top) out |= Mask{1} << x;
        }
        return out;
    }

    Mask minimal(Mask s) const {
        Mask out = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (!(s >> x & 1)) continue;
            bool bottom = true;
            for (std::size_t y = 0; y < n && bottom; ++y)
                if (y != x && (s >> y & 1) && le[y][x]) bottom = false;
            if (bottom) out |= Mask{1} << x;
        }
        return out;
    }

    Mask down_closure(Mask s) const {
        Mask out = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if ((s >> y & 1) && le[x][y]) out |= Mask{1} << x;
        return out;
    }

    Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    /// Ψ(I) = ideal generated by min(P \ I).
    Mask rowmotion(Mask ideal) const { return down_closure(minimal(all() & ~ideal)); }

    /// Every ideal, by filtering all 2^n subsets (n <= 24).
    std::vector<Mask> ideals() const {
        if (n > 24) throw std::invalid_argument("subset enumeration limited to 24 elements");
        std::vector<Mask> out;
        for (Mask s = 0; s <= all(); ++s)
            if (is_ideal(s)) out.push_back(s);
        return out;
    }

    /// Orbits of Ψ as lists of ideals.
    std::vector<std::vector<Mask>> orbits() const {
        const auto all_ideals = ideals();
        std::vector<bool> seen(all_ideals.size(), false);
        auto index = [&](Mask s) {
            return static_cast<std::size_t>(std::lower_bound(all_ideals.begin(), all_ideals.end(), s) - all_ideals.begin());
        };
        std::vector<std::vector<Mask>> out;
        for (std::size_t k = 0; k < all_ideals.size(); ++k) {
            if (seen[k]) continue;
            std::vector<Mask> orbit;
            Mask cur = all_ideals[k];
            do {
                seen[index(cur)] = true;
                orbit.push_back(cur);
                cur = rowmotion(cur);
            } while (cur != all_ideals[k]);
            out.push_back(std::move(orbit));
        }
        return out;
    }
};

inline int popcount(Mask s) { return __builtin_popcountll(s); }

inline Mask to_mask(const rowmotion::ElementSet& s) {
    Mask out = 0;
    s.for_each([&](std::size_t x) { out |= Mask{1} << x; });
    return out;
}

inline rowmotion::ElementSet from_mask(Mask m) {
    rowmotion::ElementSet out;
    for (std::size_t x = 0; x < 64; ++x)
        if (m >> x & 1) out.insert(x);
    return out;
}

/// Binomial coefficient for small arguments.
inline std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
