#include "rowmotion/homomesy.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace rowmotion {

namespace {

struct SetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

Rational indicator(bool b) { return Rational(b ? 1 : 0); }

void check_star(const std::vector<OrbitReport>& orbits, const std::vector<std::size_t>& star) {
    if (orbits.empty()) return;
    const std::size_t n = orbits.front().ideals.front().poset().size();
    if (star.size() != n) throw std::invalid_argument("involution size does not match the poset");
    for (std::size_t p = 0; p < n; ++p)
        if (star[p] >= n || star[star[p]] != p) throw std::invalid_argument("star map is not an involution");
}

// A uniformly random antichain would need the full count; a random greedy
// antichain is enough to spread the seeds.
ElementSet random_ideal(const Poset& p, std::mt19937_64& rng) {
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t keep = std::uniform_int_distribution<std::size_t>(0, p.size())(rng);
    ElementSet antichain;
    for (std::size_t k = 0; k < keep; ++k) {
        const std::size_t x = order[k];
        bool free = true;
        antichain.for_each([&](std::size_t y) { free = free && !p.comparable(x, y); });
        if (free) antichain.insert(x);
    }
    return generated_ideal(p, antichain);
}

}  // namespace

OrbitStatistic antichain_cardinality() {
    return {"|Γ(I)|", [](const IdealSet& i) -> Rational {
                return Rational(static_cast<unsigned long>(max_elements(i.poset(), i.members()).size()));
            }};
}

OrbitStatistic ideal_indicator_sum(const Poset& p, std::size_t a, std::size_t b) {
    return {"χ_" + p.label(a) + " + χ_" + p.label(b),
            [a, b](const IdealSet& i) -> Rational { return indicator(i.contains(a)) + indicator(i.contains(b)); }};
}

OrbitStatistic antichain_indicator_difference(const Poset& p, std::size_t a, std::size_t b) {
    return {"χ'_" + p.label(a) + " - χ'_" + p.label(b), [a, b](const IdealSet& i) -> Rational {
                const ElementSet top = max_elements(i.poset(), i.members());
                return Rational(indicator(top.contains(a)) - indicator(top.contains(b)));
            }};
}

Rational orbit_average(const OrbitReport& orbit, const OrbitStatistic& stat) {
    Rational total = 0;
    for (const IdealSet& i : orbit.ideals) total += stat.evaluate(i);
    Rational avg = total / Rational(static_cast<unsigned long>(orbit.length));
    avg.canonicalize();
    return avg;
}

Rational orbit_average_size(const OrbitReport& orbit) {
    const std::size_t total = std::accumulate(orbit.antichain_sizes.begin(), orbit.antichain_sizes.end(), std::size_t{0});
    Rational avg(static_cast<unsigned long>(total), static_cast<unsigned long>(orbit.length));
    avg.canonicalize();
    return avg;
}

HomomesyReport check_mesic(const std::vector<OrbitReport>& orbits, const OrbitStatistic& stat,
                           std::optional<Rational> c) {
    HomomesyReport r;
    r.statistic = stat.name;
    r.expected = std::move(c);
    for (const OrbitReport& o : orbits) r.averages.push_back(orbit_average(o, stat));
    r.homomesic = std::adjacent_find(r.averages.begin(), r.averages.end(), std::not_equal_to<>()) == r.averages.end();
    if (r.homomesic && !r.averages.empty()) r.constant = r.averages.front();
    return r;
}

HomomesyReport check_mesic(const Poset& p, const OrbitStatistic& stat, std::optional<Rational> c,
                           const EnumerationOptions& opts) {
    return check_mesic(all_orbits(p, opts), stat, std::move(c));
}

HomomesyReport verify_constant_average(const Poset& p, const Rational& expected, const EnumerationOptions& opts) {
    const auto orbits = all_orbits(p, opts);
    HomomesyReport r;
    r.statistic = "|Γ(I)|";
    r.expected = expected;
    // The stored averages already are exact; no need to re-evaluate.
    for (const OrbitReport& o : orbits) r.averages.push_back(orbit_average_size(o));
    r.homomesic = std::adjacent_find(r.averages.begin(), r.averages.end(), std::not_equal_to<>()) == r.averages.end();
    if (r.homomesic && !r.averages.empty()) r.constant = r.averages.front();
    return r;
}

Rational delta1_expected_average(const Poset& p) {
    Rational q(static_cast<unsigned long>(p.size()), static_cast<unsigned long>(p.max_rank() + 1));
    q.canonicalize();
    return q;
}

OccurrenceTable occurrence_counts(const OrbitReport& orbit) {
    OccurrenceTable t;
    t.orbit_length = orbit.length;
    if (orbit.ideals.empty()) return t;
    const Poset& p = orbit.ideals.front().poset();
    t.ideal_counts.assign(p.size(), 0);
    t.antichain_counts.assign(p.size(), 0);
    for (const IdealSet& i : orbit.ideals) {
        i.members().for_each([&](std::size_t x) { ++t.ideal_counts[x]; });
        max_elements(p, i.members()).for_each([&](std::size_t x) { ++t.antichain_counts[x]; });
    }
    return t;
}

OrbitCoverage cover_orbits(const Poset& p, const CoverageOptions& opts) {
    try {
        return {all_orbits(p, opts.enumeration), false};
    } catch (const CapExceeded&) {
        if (opts.sample_seeds == 0) throw;
    }
    OrbitCoverage out;
    out.partial = true;
    std::mt19937_64 rng(opts.rng_seed);
    std::unordered_set<ElementSet, SetHash> seen;
    for (std::size_t k = 0; k < opts.sample_seeds; ++k) {
        const ElementSet seed = random_ideal(p, rng);
        if (seen.contains(seed)) continue;
        OrbitReport orbit = orbit_of(IdealSet::unchecked(p, seed));
        for (const IdealSet& i : orbit.ideals) seen.insert(i.members());
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

ConjectureReport check_conjecture_ideals(const std::vector<OrbitReport>& orbits, const std::vector<std::size_t>& star) {
    check_star(orbits, star);
    ConjectureReport r;
    r.conjecture = "ideals";
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        const OccurrenceTable t = occurrence_counts(orbits[k]);
        for (std::size_t p = 0; p < star.size(); ++p) {
            const std::size_t lhs = t.ideal_counts[p] + t.ideal_counts[star[p]];
            if (lhs != t.orbit_length)
                r.witnesses.push_back({k, orbits[k].ideals.front().members(), t.orbit_length, p, star[p], lhs,
                                       t.orbit_length});
        }
        ++r.orbits_checked;
        r.ideals_covered += orbits[k].length;
    }
    return r;
}

ConjectureReport check_conjecture_antichains(const std::vector<OrbitReport>& orbits,
                                             const std::vector<std::size_t>& star) {
    check_star(orbits, star);
    ConjectureReport r;
    r.conjecture = "antichains";
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        const OccurrenceTable t = occurrence_counts(orbits[k]);
        for (std::size_t p = 0; p < star.size(); ++p) {
            // Each unordered pair once; self-paired elements hold trivially.
            if (star[p] <= p) continue;
            if (t.antichain_counts[p] != t.antichain_counts[star[p]])
                r.witnesses.push_back({k, orbits[k].ideals.front().members(), t.orbit_length, p, star[p],
                                       t.antichain_counts[p], t.antichain_counts[star[p]]});
        }
        ++r.orbits_checked;
        r.ideals_covered += orbits[k].length;
    }
    return r;
}

ConjectureReport check_conjecture_ideals(const RootLayer& layer, const CoverageOptions& opts) {
    const OrbitCoverage cover = cover_orbits(layer.poset, opts);
    ConjectureReport r = check_conjecture_ideals(cover.orbits, layer.star);
    r.partial = cover.partial;
    return r;
}

ConjectureReport check_conjecture_antichains(const RootLayer& layer, const CoverageOptions& opts) {
    const OrbitCoverage cover = cover_orbits(layer.poset, opts);
    ConjectureReport r = check_conjecture_antichains(cover.orbits, layer.star);
    r.partial = cover.partial;
    return r;
}

KTypeSplit split_k_orbits(const KProduct& k, const EnumerationOptions& opts) {
    KTypeSplit out;
    for (OrbitReport& o : all_orbits(k.poset(), opts)) {
        const bool full = k.is_full_rank(o.ideals.front());
        for (const IdealSet& i : o.ideals)
            if (k.is_full_rank(i) != full) out.invariant = false;
        (full ? out.type_one : out.type_two).push_back(std::move(o));
    }
    return out;
}

}  // namespace rowmotion
