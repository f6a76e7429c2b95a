#include "rowmotion/constructions.hpp"

#include "rowmotion/root_system.hpp"
#include "rowmotion/rowmotion.hpp"

namespace rowmotion {

namespace {

void require_positive(int k, const char* what) {
    if (k < 1) throw PosetError(std::string(what) + " parameter must be at least 1");
}

}  // namespace

Poset chain(int k) {
    require_positive(k, "chain");
    std::vector<Cover> covers;
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
    return Poset::from_covers(static_cast<std::size_t>(k), covers);
}

Poset product(const Poset& a, const Poset& b) {
    const std::size_t nb = b.size();
    auto id = [nb](std::size_t x, std::size_t y) { return x * nb + y; };
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
    for (const auto& [lo, hi] : a.covers())
        for (std::size_t y = 0; y < nb; ++y) covers.emplace_back(id(lo, y), id(hi, y));
    for (std::size_t x = 0; x < a.size(); ++x)
        for (const auto& [lo, hi] : b.covers()) covers.emplace_back(id(x, lo), id(x, hi));
    return Poset::from_covers(a.size() * nb, covers, std::move(labels));
}

Poset ordinal_sum(const Poset& a, const Poset& b) {
    const std::size_t na = a.size();
    std::vector<Cover> covers(a.covers());
    for (const auto& [lo, hi] : b.covers()) covers.emplace_back(na + lo, na + hi);
    a.maximal_elements().for_each([&](std::size_t x) {
        b.minimal_elements().for_each([&](std::size_t y) { covers.emplace_back(x, na + y); });
    });
    std::vector<std::string> labels(a.labels());
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    return Poset::from_covers(na + b.size(), covers, std::move(labels));
}

Poset disjoint_union(const Poset& a, const Poset& b) {
    if (!a.empty() && !b.empty() && a.max_rank() != b.max_rank())
        throw PosetError("disjoint union of posets of heights " + std::to_string(a.max_rank()) +
                         " and " + std::to_string(b.max_rank()) + " is not graded");
    const std::size_t na = a.size();
    std::vector<Cover> covers(a.covers());
    for (const auto& [lo, hi] : b.covers()) covers.emplace_back(na + lo, na + hi);
    std::vector<std::string> labels(a.labels());
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    return Poset::from_covers(na + b.size(), covers, std::move(labels));
}

Poset ideal_lattice(const Poset& p) {
    std::vector<IdealSet> ideals;
    try {
        ideals = enumerate_ideals(p, ElementSet::kCapacity);
    } catch (const CapExceeded&) {
        throw PosetError("J(P) has more than " + std::to_string(ElementSet::kCapacity) +
                         " elements, the supported maximum");
    }
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    const bool spell_out = p.size() <= 12;
    for (std::size_t k = 0; k < ideals.size(); ++k) {
        const ElementSet& s = ideals[k].members();
        labels.push_back(spell_out ? "{" + describe(p, s) + "}" : "I" + std::to_string(k + 1));
        for (std::size_t t = 0; t < ideals.size(); ++t) {
            const ElementSet& u = ideals[t].members();
            if (s.is_subset_of(u) && u.size() == s.size() + 1) covers.emplace_back(k, t);
        }
    }
    return Poset::from_covers(ideals.size(), covers, std::move(labels));
}

Poset k_poset(int r) {
    require_positive(r, "K");
    const std::size_t n = 2 * static_cast<std::size_t>(r) + 2;
    std::vector<std::string> labels;
    for (int i = 1; i <= r; ++i) labels.push_back(std::to_string(i));
    labels.push_back(std::to_string(r + 1));
    labels.push_back(std::to_string(r + 1) + "'");
    for (int i = r + 2; i <= 2 * r + 1; ++i) labels.push_back(std::to_string(i));

    const std::size_t ru = static_cast<std::size_t>(r);
    const std::size_t mid = ru, mid_prime = ru + 1, top = ru + 2;
    std::vector<Cover> covers;
    for (std::size_t i = 0; i + 1 < ru; ++i) covers.emplace_back(i, i + 1);
    covers.emplace_back(ru - 1, mid);
    covers.emplace_back(ru - 1, mid_prime);
    covers.emplace_back(mid, top);
    covers.emplace_back(mid_prime, top);
    for (std::size_t i = top; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return Poset::from_covers(n, covers, std::move(labels));
}

Poset h_poset(int n) {
    require_positive(n, "H");
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) cells.emplace_back(i, j);
    auto id = [&](int i, int j) {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k] == std::pair{i, j}) return k;
        return cells.size();
    };
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const auto [i, j] = cells[k];
        labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (i + 1 <= j) covers.emplace_back(k, id(i + 1, j));
        if (j + 1 <= n) covers.emplace_back(k, id(i, j + 1));
    }
    return Poset::from_covers(cells.size(), covers, std::move(labels));
}

Poset build(const PosetExpr& e) {
    using Kind = PosetExpr::Kind;
    switch (e.kind) {
        case Kind::Chain: return chain(e.param);
        case Kind::K: return k_poset(e.param);
        case Kind::H: return h_poset(e.param);
        case Kind::J: return ideal_lattice(build(e.children.at(0)));
        case Kind::Prod: return product(build(e.children.at(0)), build(e.children.at(1)));
        case Kind::OSum: return ordinal_sum(build(e.children.at(0)), build(e.children.at(1)));
        case Kind::DUnion: return disjoint_union(build(e.children.at(0)), build(e.children.at(1)));
        case Kind::Layer: return layer(e.type, e.param).poset;
    }
    throw PosetError("malformed poset expression");
}

}  // namespace rowmotion
