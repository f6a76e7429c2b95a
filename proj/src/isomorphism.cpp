#include "rowmotion/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace rowmotion {

namespace {

using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;

/// Joint colour refinement over both posets so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Poset& a, const Poset& b) {
    const Poset* posets[2] = {&a, &b};
    std::vector<int> colour[2];
    {
        std::map<std::tuple<int, std::size_t, std::size_t>, int> ids;
        for (int side = 0; side < 2; ++side)
            for (std::size_t x = 0; x < posets[side]->size(); ++x) {
                const Poset& p = *posets[side];
                const auto key = std::tuple{p.rank(x), p.lower_covers(x).size(), p.upper_covers(x).size()};
                const auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
                (void)fresh;
                colour[side].push_back(it->second);
            }
    }
    std::size_t classes = 0;
    while (true) {
        std::map<Signature, int> ids;
        std::vector<int> next[2];
        for (int side = 0; side < 2; ++side) {
            const Poset& p = *posets[side];
            for (std::size_t x = 0; x < p.size(); ++x) {
                std::vector<int> lo, hi;
                p.lower_covers(x).for_each([&](std::size_t z) { lo.push_back(colour[side][z]); });
                p.upper_covers(x).for_each([&](std::size_t z) { hi.push_back(colour[side][z]); });
                std::sort(lo.begin(), lo.end());
                std::sort(hi.begin(), hi.end());
                const auto [it, fresh] =
                    ids.emplace(Signature{colour[side][x], std::move(lo), std::move(hi)}, static_cast<int>(ids.size()));
                (void)fresh;
                next[side].push_back(it->second);
            }
        }
        colour[0] = std::move(next[0]);
        colour[1] = std::move(next[1]);
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return {colour[0], colour[1]};
}

struct Search {
    const Poset& a;
    const Poset& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<std::size_t> image;
    std::vector<char> used;

    bool extend(std::size_t x) {
        if (x == a.size()) return true;
        ElementSet wanted;
        a.lower_covers(x).for_each([&](std::size_t z) { wanted.insert(image[z]); });
        for (std::size_t y = 0; y < b.size(); ++y) {
            if (used[y] || cb[y] != ca[x] || !(b.lower_covers(y) == wanted)) continue;
            used[y] = 1;
            image[x] = y;
            if (extend(x + 1)) return true;
            used[y] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& a, const Poset& b) {
    if (a.size() != b.size() || a.covers().size() != b.covers().size() || a.max_rank() != b.max_rank())
        return std::nullopt;
    const auto [ca, cb] = refine(a, b);
    std::vector<int> ha(ca), hb(cb);
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;

    Search s{a, b, ca, cb, std::vector<std::size_t>(a.size()), std::vector<char>(b.size(), 0)};
    if (!s.extend(0)) return std::nullopt;
    return s.image;
}

}  // namespace rowmotion
