#include "rowmotion/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rowmotion {

namespace {

std::vector<std::vector<int>> gram_matrix(const RootType& t) {
    const int l = t.rank;
    std::vector<std::vector<int>> g(l, std::vector<int>(l, 0));
    auto link = [&](int a, int b, int value) {  // 1-based
        g[a - 1][b - 1] = value;
        g[b - 1][a - 1] = value;
    };
    switch (t.family) {
        case Family::A:
            for (int i = 1; i <= l; ++i) g[i - 1][i - 1] = 2;
            for (int i = 1; i < l; ++i) link(i, i + 1, -1);
            break;
        case Family::B:
            for (int i = 1; i < l; ++i) g[i - 1][i - 1] = 4;
            g[l - 1][l - 1] = 2;
            for (int i = 1; i < l; ++i) link(i, i + 1, -2);
            break;
        case Family::C:
            for (int i = 1; i < l; ++i) g[i - 1][i - 1] = 2;
            g[l - 1][l - 1] = 4;
            for (int i = 1; i + 1 < l; ++i) link(i, i + 1, -1);
            link(l - 1, l, -2);
            break;
        case Family::D:
            for (int i = 1; i <= l; ++i) g[i - 1][i - 1] = 2;
            for (int i = 1; i + 1 < l; ++i) link(i, i + 1, -1);
            link(l - 2, l, -1);
            break;
        case Family::E:
            for (int i = 1; i <= l; ++i) g[i - 1][i - 1] = 2;
            link(1, 3, -1);
            link(2, 4, -1);
            for (int i = 3; i < l; ++i) link(i, i + 1, -1);
            break;
        case Family::F:
            g[0][0] = g[1][1] = 4;
            g[2][2] = g[3][3] = 2;
            link(1, 2, -2);
            link(2, 3, -2);
            link(3, 4, -1);
            break;
        case Family::G:
            g[0][0] = 2;
            g[1][1] = 6;
            link(1, 2, -3);
            break;
    }
    return g;
}

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

int RootSystem::coroot_pairing(const RootVector& v, int j) const {
    int inner = 0;
    for (int i = 0; i < rank(); ++i) inner += v[i] * gram[i][j - 1];
    return 2 * inner / gram[j - 1][j - 1];
}

RootVector RootSystem::reflect(const RootVector& v, int j) const {
    RootVector out = v;
    out[j - 1] -= coroot_pairing(v, j);
    return out;
}

bool RootSystem::is_positive_root(const RootVector& v) const {
    return std::binary_search(positive_roots.begin(), positive_roots.end(), v,
                              [](const RootVector& a, const RootVector& b) {
                                  const int ha = height(a), hb = height(b);
                                  return ha != hb ? ha < hb : a < b;
                              });
}

RootSystem positive_roots(const RootType& type) {
    validate(type);
    RootSystem rs;
    rs.type = type;
    rs.gram = gram_matrix(type);
    const int l = type.rank;
    rs.cartan.assign(l, std::vector<int>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) rs.cartan[i][j] = 2 * rs.gram[i][j] / rs.gram[j][j];

    std::set<RootVector> known;
    std::vector<RootVector> level;
    for (int j = 0; j < l; ++j) {
        RootVector v(l, 0);
        v[j] = 1;
        level.push_back(v);
        known.insert(v);
    }
    while (!level.empty()) {
        std::sort(level.begin(), level.end());
        rs.positive_roots.insert(rs.positive_roots.end(), level.begin(), level.end());
        std::set<RootVector> next;
        for (const auto& beta : level) {
            for (int j = 1; j <= l; ++j) {
                // α_j-string through β: β − pα_j, ..., β + qα_j with p − q = ⟨β, α_j^∨⟩.
                int p = 0;
                RootVector down = beta;
                while (true) {
                    down[j - 1] -= 1;
                    if (down[j - 1] < 0 || !known.count(down)) break;
                    ++p;
                }
                const int q = p - rs.coroot_pairing(beta, j);
                if (q > 0) {
                    RootVector up = beta;
                    up[j - 1] += 1;
                    if (known.insert(up).second) next.insert(up);
                }
            }
        }
        level.assign(next.begin(), next.end());
    }
    return rs;
}

int knapp_to_bourbaki(const RootType& type, int knapp_index) {
    if (type.family == Family::F) return 5 - knapp_index;
    return knapp_index;
}

RootVector apply_word(const RootSystem& rs, const std::vector<int>& word, RootVector v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = rs.reflect(v, *it);
    return v;
}

std::vector<int> longest_parabolic_word(const RootSystem& rs, const std::vector<int>& generators) {
    // Extend w by s_j while w(α_j) is still positive (ℓ(w s_j) > ℓ(w)); stops
    // exactly when w sends every simple root of the subsystem negative.
    std::vector<int> word;
    while (true) {
        bool extended = false;
        for (int j : generators) {
            RootVector simple(rs.rank(), 0);
            simple[j - 1] = 1;
            const RootVector image = apply_word(rs, word, simple);
            if (std::all_of(image.begin(), image.end(), [](int c) { return c >= 0; })) {
                word.push_back(j);
                extended = true;
                break;
            }
        }
        if (!extended) return word;
    }
}

std::string RootLayer::name() const {
    return "[a" + std::to_string(pivot) + "] in " + to_string(base.type);
}

RootLayer layer(const RootType& type, int knapp_pivot) {
    validate(type);
    if (knapp_pivot < 1 || knapp_pivot > type.rank)
        throw std::out_of_range("pivot " + std::to_string(knapp_pivot) + " is outside 1.." +
                                std::to_string(type.rank) + " for " + to_string(type));
    RootLayer out;
    out.base = positive_roots(type);
    out.pivot = knapp_pivot;
    out.bourbaki_pivot = knapp_to_bourbaki(type, knapp_pivot);
    const int i = out.bourbaki_pivot;

    std::vector<RootVector> members;
    for (const auto& r : out.base.positive_roots)
        if (r[i - 1] == 1) members.push_back(r);

    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < members.size(); ++a) {
        std::string label;
        for (int c : members[a]) label += std::to_string(c);
        labels.push_back(label);
        for (std::size_t b = 0; b < members.size(); ++b) {
            int diff_total = 0;
            bool nonneg = true;
            for (int k = 0; k < type.rank; ++k) {
                const int d = members[b][k] - members[a][k];
                nonneg = nonneg && d >= 0;
                diff_total += d;
            }
            if (nonneg && diff_total == 1) covers.emplace_back(a, b);
        }
    }
    out.poset = Poset::from_covers(members.size(), covers, labels);
    out.roots.resize(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) out.roots[out.poset.position_of_input(a)] = members[a];

    std::vector<int> generators;
    for (int j = 1; j <= type.rank; ++j)
        if (j != i) generators.push_back(j);
    out.longest_word = longest_parabolic_word(out.base, generators);

    out.star.resize(members.size());
    for (std::size_t p = 0; p < out.roots.size(); ++p) {
        const RootVector image = apply_word(out.base, out.longest_word, out.roots[p]);
        const auto it = std::find(out.roots.begin(), out.roots.end(), image);
        if (it == out.roots.end())
            throw std::logic_error("w_0^i moved a root out of the layer " + out.name());
        out.star[p] = static_cast<std::size_t>(it - out.roots.begin());
    }
    return out;
}

std::size_t star_involution(const RootLayer& layer, std::size_t p) { return layer.star.at(p); }

}  // namespace rowmotion
