#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rowmotion/k_codec.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/rational.hpp"
#include "rowmotion/root_system.hpp"
#include "rowmotion/rowmotion.hpp"

namespace rowmotion {

/// A function on ideals whose orbit averages are compared.
struct OrbitStatistic {
    std::string name;
    std::function<Rational(const IdealSet&)> evaluate;
};

/// |Γ(I)|.
OrbitStatistic antichain_cardinality();
/// χ_p + χ_q on ideals.
OrbitStatistic ideal_indicator_sum(const Poset& p, std::size_t a, std::size_t b);
/// χ'_p − χ'_q on antichains, read through Γ.
OrbitStatistic antichain_indicator_difference(const Poset& p, std::size_t a, std::size_t b);

struct HomomesyReport {
    std::string statistic;
    std::vector<Rational> averages;  // one per orbit, in orbit order
    bool homomesic = false;          // all averages equal
    std::optional<Rational> constant;
    std::optional<Rational> expected;

    /// Homomesic with the expected constant (or just homomesic if none).
    bool passed() const { return homomesic && (!expected || constant == expected); }
};

Rational orbit_average(const OrbitReport& orbit, const OrbitStatistic& stat);
/// Exact mean of |Γ| over the orbit.
Rational orbit_average_size(const OrbitReport& orbit);

HomomesyReport check_mesic(const std::vector<OrbitReport>& orbits, const OrbitStatistic& stat,
                           std::optional<Rational> c = std::nullopt);
HomomesyReport check_mesic(const Poset& p, const OrbitStatistic& stat, std::optional<Rational> c = std::nullopt,
                           const EnumerationOptions& opts = {});

/// Every orbit averages exactly `expected` antichain elements.
HomomesyReport verify_constant_average(const Poset& p, const Rational& expected, const EnumerationOptions& opts = {});

/// #P / (d + 1), the value claimed for every Δ(1).
Rational delta1_expected_average(const Poset& p);

/// M_O(p) (ideals containing p) and N_O(p) (antichains containing p).
struct OccurrenceTable {
    std::size_t orbit_length = 0;
    std::vector<std::size_t> ideal_counts;      // M_O
    std::vector<std::size_t> antichain_counts;  // N_O
};

OccurrenceTable occurrence_counts(const OrbitReport& orbit);

/// A violation: the orbit seeded at `seed`, element p and its partner.
struct ConjectureWitness {
    std::size_t orbit = 0;
    ElementSet seed;
    std::size_t orbit_length = 0;
    std::size_t p = 0;
    std::size_t p_star = 0;
    std::size_t lhs = 0;  // M_O(p) + M_O(p*)  or  N_O(p)
    std::size_t rhs = 0;  // |O|               or  N_O(p*)
};

struct ConjectureReport {
    std::string conjecture;  // "ideals" or "antichains"
    std::size_t orbits_checked = 0;
    std::size_t ideals_covered = 0;
    bool partial = false;  // only sampled orbits were checked
    std::vector<ConjectureWitness> witnesses;

    bool holds() const { return witnesses.empty(); }
};

/// How to cover the orbits. Exhaustive unless the ideal count exceeds
/// enumeration.cap; then `sample_seeds` random orbit seeds are used if
/// non-zero (each orbit walked in full), otherwise CapExceeded propagates.
struct CoverageOptions {
    EnumerationOptions enumeration;
    std::size_t sample_seeds = 0;
    std::uint64_t rng_seed = 1;
};

/// The orbits to check, plus whether they are only a sample.
struct OrbitCoverage {
    std::vector<OrbitReport> orbits;
    bool partial = false;
};

OrbitCoverage cover_orbits(const Poset& p, const CoverageOptions& opts = {});

/// M_O(p) + M_O(p*) = |O| for every orbit and every p.
ConjectureReport check_conjecture_ideals(const std::vector<OrbitReport>& orbits, const std::vector<std::size_t>& star);
/// N_O(p) = N_O(p*) for every orbit and every p.
ConjectureReport check_conjecture_antichains(const std::vector<OrbitReport>& orbits,
                                             const std::vector<std::size_t>& star);

ConjectureReport check_conjecture_ideals(const RootLayer& layer, const CoverageOptions& opts = {});
ConjectureReport check_conjecture_antichains(const RootLayer& layer, const CoverageOptions& opts = {});

/// Orbits of [m]×K_{n-1} split by type. Type I orbits consist of full-rank
/// ideals; the split uses each orbit's first ideal and separately checks
/// that full rank is constant along every orbit.
struct KTypeSplit {
    std::vector<OrbitReport> type_one;
    std::vector<OrbitReport> type_two;
    bool invariant = true;
};

KTypeSplit split_k_orbits(const KProduct& k, const EnumerationOptions& opts = {});

}  // namespace rowmotion
