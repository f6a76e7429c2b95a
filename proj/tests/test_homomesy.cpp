#include <doctest.h>

#include <numeric>
#include <set>

#include "oracle.hpp"
#include "rowmotion/catalog.hpp"
#include "rowmotion/constructions.hpp"
#include "rowmotion/homomesy.hpp"

using namespace rowmotion;

namespace {

Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// Orbit averages of |Γ| straight from the oracle, as sorted distinct values.
std::set<std::pair<long, long>> oracle_averages(const Poset& p) {
    const oracle::Order order(p);
    std::set<std::pair<long, long>> out;
    for (const auto& orbit : order.orbits()) {
        long total = 0;
        for (oracle::Mask s : orbit) total += oracle::popcount(order.maximal(s));
        const long len = static_cast<long>(orbit.size()), g = std::gcd(total, len);
        out.insert({total / g, len / g});
    }
    return out;
}

}  // namespace

TEST_CASE("orbit averages on grids and [m] x K") {
    // Orbits point at their poset, so every poset here outlives its orbits.
    const Poset g = product(chain(3), chain(4)), mk = product(chain(2), k_poset(2)), k1 = k_poset(1);
    for (const OrbitReport& o : all_orbits(g)) CHECK(orbit_average_size(o) == frac(12, 7));
    for (const OrbitReport& o : all_orbits(mk)) CHECK(orbit_average_size(o) == frac(12, 7));
    const OrbitReport cycle = orbit_of(IdealSet::empty(k1));
    CHECK(orbit_average_size(cycle) == Rational(1));
    CHECK(orbit_average(cycle, antichain_cardinality()) == Rational(1));
}

TEST_CASE("constant averages on small instances") {
    CHECK(verify_constant_average(product(chain(2), chain(3)), frac(6, 5)).passed());
    CHECK(verify_constant_average(product(chain(2), k_poset(2)), frac(12, 7)).passed());
    CHECK_FALSE(verify_constant_average(product(chain(2), chain(3)), frac(5, 6)).passed());

    const Poset h3 = h_poset(3);
    const HomomesyReport r = verify_constant_average(h3, delta1_expected_average(h3));
    CHECK(delta1_expected_average(h3) == Rational(1));
    CHECK(r.passed() == (oracle_averages(h3) == std::set<std::pair<long, long>>{{1, 1}}));
}

TEST_CASE("averages match the oracle, including non-homomesic posets") {
    // A poset outside Δ(1): orbit averages need not agree.
    const Poset odd = ordinal_sum(chain(1), product(chain(2), chain(3)));
    const HomomesyReport r = check_mesic(odd, antichain_cardinality());
    std::set<std::pair<long, long>> seen;
    for (const Rational& q : r.averages) seen.insert({q.get_num().get_si(), q.get_den().get_si()});
    CHECK(seen == oracle_averages(odd));
    CHECK(r.homomesic == (seen.size() == 1));
}

TEST_CASE("occurrence counts on the rank-ideal orbit of a chain") {
    for (int k = 1; k <= 6; ++k) {
        const Poset c = chain(k);
        const OrbitReport o = orbit_of(IdealSet::empty(c));
        const OccurrenceTable t = occurrence_counts(o);
        for (std::size_t p = 0; p < c.size(); ++p) {
            CHECK(t.ideal_counts[p] == static_cast<std::size_t>(k + 1 - c.rank(p)));
            CHECK(t.antichain_counts[p] == 1);
        }
    }
}

TEST_CASE("occurrence counts double count ideal and antichain sizes") {
    const Poset p = product(chain(3), k_poset(2));
    for (const OrbitReport& o : all_orbits(p)) {
        const OccurrenceTable t = occurrence_counts(o);
        std::size_t ideal_total = 0, antichain_total = 0;
        for (const IdealSet& i : o.ideals) ideal_total += i.size();
        for (std::size_t s : o.antichain_sizes) antichain_total += s;
        CHECK(std::accumulate(t.ideal_counts.begin(), t.ideal_counts.end(), std::size_t{0}) == ideal_total);
        CHECK(std::accumulate(t.antichain_counts.begin(), t.antichain_counts.end(), std::size_t{0}) == antichain_total);
        for (std::size_t p = 0; p < t.ideal_counts.size(); ++p) {
            CHECK(t.ideal_counts[p] <= o.length);
            CHECK(t.antichain_counts[p] <= o.length);
        }
    }
}

TEST_CASE("conjectures hold on [m]x[n] layers of type A") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; m + n <= 9; ++n) {
            const RootLayer lay = layer({Family::A, m + n - 1}, m);
            CHECK(check_conjecture_ideals(lay).holds());
            CHECK(check_conjecture_antichains(lay).holds());
        }
    const RootLayer small = layer({Family::A, 3}, 2);
    const ConjectureReport r = check_conjecture_antichains(small);
    CHECK(r.holds());
    CHECK(r.ideals_covered == 6);
    CHECK_FALSE(r.partial);
}

TEST_CASE("self-paired elements sit in exactly half of each orbit") {
    const RootLayer lay = layer({Family::F, 4}, 4);
    const auto orbits = all_orbits(lay.poset);
    const bool holds = check_conjecture_ideals(orbits, lay.star).holds();
    for (const OrbitReport& o : orbits) {
        const OccurrenceTable t = occurrence_counts(o);
        for (std::size_t p = 0; p < lay.star.size(); ++p)
            if (lay.star[p] == p && holds) CHECK(2 * t.ideal_counts[p] == o.length);
    }
}

TEST_CASE("homomesy phrasing agrees with the occurrence checks") {
    std::vector<RootLayer> layers;
    for (const CatalogEntry& e : catalog()) layers.push_back(layer(e.type, e.pivot));
    for (const ClassicalLayer& c : classical_layers(12)) layers.push_back(layer(c.type, c.pivot));
    for (const RootLayer& lay : layers) {
        const auto orbits = all_orbits(lay.poset);
        const ConjectureReport ideals = check_conjecture_ideals(orbits, lay.star);
        const ConjectureReport antichains = check_conjecture_antichains(orbits, lay.star);
        for (std::size_t p = 0; p < lay.star.size(); ++p) {
            const bool one = check_mesic(orbits, ideal_indicator_sum(lay.poset, p, lay.star[p]), Rational(1)).passed();
            const bool zero =
                check_mesic(orbits, antichain_indicator_difference(lay.poset, p, lay.star[p]), Rational(0)).passed();
            auto involves = [p](const ConjectureWitness& w) { return w.p == p || w.p_star == p; };
            CHECK(one == std::none_of(ideals.witnesses.begin(), ideals.witnesses.end(), involves));
            CHECK(zero == std::none_of(antichains.witnesses.begin(), antichains.witnesses.end(), involves));
        }
    }
}

TEST_CASE("violations produce well-formed witnesses") {
    // The identity is an involution but not the star map of [2]x[3].
    const Poset g = product(chain(2), chain(3));
    std::vector<std::size_t> identity(g.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    const auto orbits = all_orbits(g);
    const ConjectureReport r = check_conjecture_ideals(orbits, identity);
    REQUIRE_FALSE(r.holds());
    for (const ConjectureWitness& w : r.witnesses) {
        REQUIRE(w.orbit < orbits.size());
        CHECK(w.seed == orbits[w.orbit].ideals.front().members());
        CHECK(w.orbit_length == orbits[w.orbit].length);
        CHECK(w.lhs != w.rhs);
        CHECK(w.rhs == w.orbit_length);
    }
    std::vector<std::size_t> broken = identity;
    broken[0] = 1;
    CHECK_THROWS_AS(check_conjecture_ideals(orbits, broken), std::invalid_argument);
}

TEST_CASE("type I and type II orbits of [m] x K both average 2mn/(m+2n-1)") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m + 2 * n - 1 <= 9; ++m) {
            const KProduct kp(m, n);
            const KTypeSplit split = split_k_orbits(kp);
            CHECK(split.invariant);
            CHECK_FALSE(split.type_one.empty());
            CHECK_FALSE(split.type_two.empty());
            const Rational expected = frac(2 * m * n, m + 2 * n - 1);
            CHECK(check_mesic(split.type_one, antichain_cardinality(), expected).passed());
            CHECK(check_mesic(split.type_two, antichain_cardinality(), expected).passed());
        }
}

TEST_CASE("sampled coverage walks complete, distinct orbits") {
    const Poset p = product(chain(4), chain(5));
    CHECK_THROWS_AS(cover_orbits(p, {{20, 1}, 0, 1}), CapExceeded);
    const OrbitCoverage cover = cover_orbits(p, {{20, 1}, 10, 7});
    CHECK(cover.partial);
    CHECK_FALSE(cover.orbits.empty());
    std::set<std::string> seen;
    for (const OrbitReport& o : cover.orbits) {
        CHECK(rowmotion_ideal(o.ideals.back()) == o.ideals.front());
        for (const IdealSet& i : o.ideals) CHECK(seen.insert(i.members().to_bits(p.size())).second);
    }
    const OrbitCoverage again = cover_orbits(p, {{20, 1}, 10, 7});
    REQUIRE(again.orbits.size() == cover.orbits.size());
    for (std::size_t k = 0; k < cover.orbits.size(); ++k) CHECK(again.orbits[k].ideals == cover.orbits[k].ideals);
}
