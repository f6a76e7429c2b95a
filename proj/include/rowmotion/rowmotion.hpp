#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rowmotion/poset.hpp"
#include "rowmotion/rational.hpp"

namespace rowmotion {

inline constexpr std::size_t kDefaultCap = 10'000'000;

/// Raised when exhaustive enumeration would exceed the antichain budget.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t cap, double estimate);
    std::size_t cap() const { return cap_; }
    /// Estimated number of ideals (random-probe estimate of the search tree).
    double estimate() const { return estimate_; }

private:
    std::size_t cap_;
    double estimate_;
};

IdealSet ideal_of_antichain(const AntichainSet& a);
AntichainSet antichain_of_ideal(const IdealSet& ideal);

/// Ψ(A) = min(P ∖ I(A)).
AntichainSet rowmotion_antichain(const AntichainSet& a);
/// Ψ on ideals, conjugated through the ideal/antichain bijection.
IdealSet rowmotion_ideal(const IdealSet& ideal);

/// Raw forms over bitsets, no validation.
ElementSet max_elements(const Poset& p, const ElementSet& ideal);
ElementSet generated_ideal(const Poset& p, const ElementSet& antichain);
ElementSet rowmotion_step(const Poset& p, const ElementSet& ideal);

struct OrbitReport {
    std::size_t length = 0;
    std::vector<IdealSet> ideals;           // ideals[k+1] = Ψ(ideals[k]), cyclically
    std::vector<std::size_t> antichain_sizes;
    Rational average_size;
};

OrbitReport orbit_of(const IdealSet& start);

struct EnumerationOptions {
    std::size_t cap = kDefaultCap;
    unsigned threads = 1;
};

/// Visits every ideal once, in lexicographic order of the bit sequence
/// (element 0 decided first, absent before present). Throws CapExceeded
/// before visiting anything if the count exceeds the cap.
void for_each_ideal(const Poset& p, const std::function<void(const ElementSet&)>& visit,
                    std::size_t cap = kDefaultCap);
std::vector<IdealSet> enumerate_ideals(const Poset& p, std::size_t cap = kDefaultCap);

/// Number of ideals, or CapExceeded when it is larger than cap.
std::size_t count_ideals(const Poset& p, std::size_t cap = kDefaultCap);

/// Knuth's random-probe estimate of the ideal count; deterministic for a seed.
double estimate_ideal_count(const Poset& p, std::size_t probes = 2000, std::uint64_t seed = 1);

/// Ψ as a permutation of the lexicographically sorted ideal list.
struct IdealPermutation {
    std::vector<ElementSet> ideals;
    std::vector<std::uint32_t> next;

    std::size_t index_of(const ElementSet& s) const;
};

IdealPermutation rowmotion_permutation(const Poset& p, const EnumerationOptions& opts = {});

/// All Ψ-orbits, seeded in lexicographic order of their smallest ideal.
std::vector<OrbitReport> all_orbits(const Poset& p, const EnumerationOptions& opts = {});

/// Orbit lengths only, in the same order as all_orbits.
std::vector<std::size_t> orbit_lengths(const Poset& p, const EnumerationOptions& opts = {});

/// Least t >= 1 with Ψ^t = id (lcm of orbit lengths).
Integer operator_order(const Poset& p, const EnumerationOptions& opts = {});

}  // namespace rowmotion
