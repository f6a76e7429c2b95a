#include "rowmotion/chain_product.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "rowmotion/constructions.hpp"

namespace rowmotion {

ChainProduct::ChainProduct(int m, Poset factor)
    : m_(m),
      factor_(std::make_shared<const Poset>(std::move(factor))),
      poset_(std::make_shared<const Poset>(product(chain(m), *factor_))) {
    const std::size_t total = poset_->size();
    index_.resize(total);
    for (std::size_t k = 0; k < total; ++k) index_[k] = poset_->position_of_input(k);
}

std::vector<ElementSet> ChainProduct::components(const ElementSet& ideal) const {
    std::vector<ElementSet> out(static_cast<std::size_t>(m_));
    for (int i = 1; i <= m_; ++i)
        for (std::size_t x = 0; x < factor_->size(); ++x)
            if (ideal.contains(element(i, x))) out[i - 1].insert(x);
    return out;
}

ElementSet ChainProduct::assemble(const std::vector<ElementSet>& components) const {
    if (components.size() != static_cast<std::size_t>(m_))
        throw std::invalid_argument("expected " + std::to_string(m_) + " components");
    ElementSet out;
    for (int i = 1; i <= m_; ++i) components[i - 1].for_each([&](std::size_t x) { out.insert(element(i, x)); });
    return out;
}

bool ChainProduct::owns(const IdealSet& ideal) const {
    return &ideal.poset() == poset_.get() || ideal.poset() == *poset_;
}

namespace {

template <typename T>
std::vector<std::pair<T, int>> group_runs(const std::vector<T>& xs) {
    std::vector<std::pair<T, int>> out;
    for (const T& x : xs) {
        if (!out.empty() && out.back().first == x)
            ++out.back().second;
        else
            out.emplace_back(x, 1);
    }
    return out;
}

template <typename T>
std::vector<T> expand(const std::vector<std::pair<T, int>>& groups) {
    std::vector<T> out;
    for (const auto& [value, count] : groups)
        for (int c = 0; c < count; ++c) out.push_back(value);
    return out;
}

}  // namespace

std::vector<int> full_rank_step(const std::vector<int>& ranks, int d) {
    for (std::size_t k = 0; k < ranks.size(); ++k) {
        if (ranks[k] < 0 || ranks[k] > d) throw std::invalid_argument("rank out of range");
        if (k > 0 && ranks[k] > ranks[k - 1]) throw std::invalid_argument("ranks must be non-increasing");
    }
    const int m = static_cast<int>(ranks.size());
    auto groups = group_runs(ranks);
    if (groups.empty() || groups.front().first != d) groups.insert(groups.begin(), {d, 0});
    const std::size_t s = groups.size() - 1;
    if (s == 0) return std::vector<int>(static_cast<std::size_t>(m), 0);

    std::vector<std::pair<int, int>> next;
    for (std::size_t g = 0; g < s; ++g)
        next.emplace_back(groups[g + 1].first + 1, groups[g].second + (g == 0 ? 1 : 0));
    next.emplace_back(0, groups[s].second - 1);
    return expand(next);
}

std::vector<KComponent> nonfull_rank_step(const std::vector<KComponent>& tuple, int n) {
    using Kind = KComponent::Kind;
    const int top = 2 * n - 1;
    bool seen_star = false;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        const KComponent& c = tuple[k];
        if (c.kind == Kind::StarPrime) throw std::invalid_argument("expected the I_n representative");
        if (c.kind == Kind::Star) {
            seen_star = true;
            continue;
        }
        if (c.rank < 0 || c.rank > top) throw std::invalid_argument("rank out of range");
        if (!seen_star && c.rank < n) throw std::invalid_argument("components above I_n must contain it");
        if (seen_star && c.rank > n - 1) throw std::invalid_argument("components below I_n must lie in it");
        if (k > 0 && tuple[k - 1].kind == Kind::Rank && tuple[k - 1].rank < c.rank)
            throw std::invalid_argument("components must decrease");
    }
    if (!seen_star) throw std::invalid_argument("tuple has no non-rank component");

    auto groups = group_runs(tuple);
    if (groups.front().first != KComponent::l(top)) groups.insert(groups.begin(), {KComponent::l(top), 0});
    const std::size_t last = groups.size() - 1;

    // Successor of each block value; I_n and L_{n-1} trade places when adjacent.
    auto successor = [&](std::size_t g) -> KComponent {
        const KComponent& v = groups[g].first;
        if (v.kind == Kind::Star) {
            const bool swap = g + 1 <= last && groups[g + 1].first == KComponent::l(n - 1);
            return swap ? KComponent::l(n) : KComponent::star_prime();
        }
        if (v.rank == n - 1 && g > 0 && groups[g - 1].first.kind == Kind::Star) return KComponent::star();
        return KComponent::l(v.rank + 1);
    };

    std::vector<std::pair<KComponent, int>> next;
    for (std::size_t g = 0; g < last; ++g) next.emplace_back(successor(g + 1), groups[g].second + (g == 0 ? 1 : 0));
    next.emplace_back(KComponent::l(0), groups[last].second - 1);
    return expand(next);
}

}  // namespace rowmotion
