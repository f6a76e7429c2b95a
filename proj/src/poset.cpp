#include "rowmotion/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rowmotion {

Poset Poset::from_covers(std::size_t n, const std::vector<Cover>& covers,
                         std::vector<std::string> labels) {
    if (n > ElementSet::kCapacity)
        throw PosetError("poset has " + std::to_string(n) + " elements; at most " +
                         std::to_string(ElementSet::kCapacity) + " are supported");
    if (!labels.empty() && labels.size() != n)
        throw PosetError("label count does not match element count");
    if (labels.empty()) {
        labels.reserve(n);
        for (std::size_t k = 0; k < n; ++k) labels.push_back(std::to_string(k + 1));
    }

    std::vector<std::vector<std::size_t>> lower(n), upper(n);
    std::set<Cover> seen;
    for (const auto& [x, y] : covers) {
        if (x >= n || y >= n) throw PosetError("cover refers to a missing element");
        if (x == y) throw PosetError("element " + labels[x] + " covers itself");
        if (!seen.insert({x, y}).second)
            throw PosetError("duplicate cover " + labels[x] + " < " + labels[y]);
        lower[y].push_back(x);
        upper[x].push_back(y);
    }

    // Kahn's algorithm; ranks are assigned as elements are released.
    std::vector<std::size_t> pending(n);
    std::vector<int> rank(n, 0);
    std::vector<std::size_t> queue;
    for (std::size_t k = 0; k < n; ++k) {
        pending[k] = lower[k].size();
        if (pending[k] == 0) {
            rank[k] = 1;
            queue.push_back(k);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t x = queue[head];
        for (std::size_t y : upper[x]) {
            if (rank[y] == 0) {
                rank[y] = rank[x] + 1;
            } else if (rank[y] != rank[x] + 1) {
                throw PosetError("poset is not graded: " + labels[y] +
                                 " has lower covers of different ranks");
            }
            if (--pending[y] == 0) queue.push_back(y);
        }
    }
    if (queue.size() != n) throw PosetError("cover relation contains a cycle");

    // With a consistent rank function no cover can be implied by a longer
    // chain, so transitive reduction needs no separate check.
    const int d = n == 0 ? 0 : *std::max_element(rank.begin(), rank.end());
    for (std::size_t k = 0; k < n; ++k)
        if (upper[k].empty() && rank[k] != d)
            throw PosetError("poset is not graded: maximal element " + labels[k] +
                             " has rank " + std::to_string(rank[k]) + " below " +
                             std::to_string(d));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });

    Poset p;
    p.max_rank_ = d;
    p.position_of_input_.assign(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos) p.position_of_input_[order[pos]] = pos;
    p.rank_.resize(n);
    p.labels_.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        p.rank_[pos] = rank[order[pos]];
        p.labels_[pos] = std::move(labels[order[pos]]);
    }
    for (const auto& [x, y] : covers)
        p.covers_.emplace_back(p.position_of_input_[x], p.position_of_input_[y]);
    std::sort(p.covers_.begin(), p.covers_.end());

    p.lower_covers_.assign(n, {});
    p.upper_covers_.assign(n, {});
    for (const auto& [x, y] : p.covers_) {
        p.lower_covers_[y].insert(x);
        p.upper_covers_[x].insert(y);
    }
    p.down_.assign(n, {});
    for (std::size_t y = 0; y < n; ++y) {
        p.down_[y].insert(y);
        p.lower_covers_[y].for_each([&](std::size_t x) { p.down_[y] |= p.down_[x]; });
    }
    p.up_.assign(n, {});
    for (std::size_t y = n; y-- > 0;) {
        p.up_[y].insert(y);
        p.upper_covers_[y].for_each([&](std::size_t z) { p.up_[y] |= p.up_[z]; });
    }
    return p;
}

std::optional<std::size_t> Poset::find_label(const std::string& label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
        if (labels_[k] == label) return k;
    return std::nullopt;
}

ElementSet Poset::minimal_elements() const {
    ElementSet s;
    for (std::size_t k = 0; k < size(); ++k)
        if (lower_covers_[k].empty()) s.insert(k);
    return s;
}

ElementSet Poset::maximal_elements() const {
    ElementSet s;
    for (std::size_t k = 0; k < size(); ++k)
        if (upper_covers_[k].empty()) s.insert(k);
    return s;
}

ElementSet Poset::rank_level(int j) const {
    ElementSet s;
    for (std::size_t k = 0; k < size(); ++k)
        if (rank_[k] == j) s.insert(k);
    return s;
}

ElementSet Poset::rank_ideal(int i) const {
    ElementSet s;
    for (std::size_t k = 0; k < size(); ++k)
        if (rank_[k] <= i) s.insert(k);
    return s;
}

bool Poset::is_ideal(const ElementSet& s) const {
    if (!s.is_subset_of(all())) return false;
    bool ok = true;
    s.for_each([&](std::size_t y) {
        if (!lower_covers_[y].is_subset_of(s)) ok = false;
    });
    return ok;
}

bool Poset::is_antichain(const ElementSet& s) const {
    if (!s.is_subset_of(all())) return false;
    bool ok = true;
    s.for_each([&](std::size_t y) {
        ElementSet others = s;
        others.erase(y);
        if (down_[y].intersects(others)) ok = false;
    });
    return ok;
}

IdealSet::IdealSet(const Poset& poset, ElementSet members) : poset_(&poset), members_(members) {
    if (!poset.is_ideal(members))
        throw PosetError("{" + describe(poset, members) + "} is not an order ideal");
}

AntichainSet::AntichainSet(const Poset& poset, ElementSet members)
    : poset_(&poset), members_(members) {
    if (!poset.is_antichain(members))
        throw PosetError("{" + describe(poset, members) + "} is not an antichain");
}

std::string describe(const Poset& poset, const ElementSet& s) {
    std::string out;
    s.for_each([&](std::size_t k) {
        if (!out.empty()) out += ',';
        out += k < poset.size() ? poset.label(k) : "#" + std::to_string(k);
    });
    return out;
}

}  // namespace rowmotion
