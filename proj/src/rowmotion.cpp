#include "rowmotion/rowmotion.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <thread>

namespace rowmotion {

namespace {

std::string format_estimate(double estimate) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", estimate);
    return buf;
}

struct CapHit {};

void collect_ideals(const Poset& p, std::size_t k, ElementSet& current,
                    std::vector<ElementSet>& out, std::size_t cap) {
    if (k == p.size()) {
        if (out.size() == cap) throw CapHit{};
        out.push_back(current);
        return;
    }
    collect_ideals(p, k + 1, current, out, cap);
    if (p.lower_covers(k).is_subset_of(current)) {
        current.insert(k);
        collect_ideals(p, k + 1, current, out, cap);
        current.erase(k);
    }
}

std::vector<ElementSet> sorted_ideals(const Poset& p, std::size_t cap) {
    std::vector<ElementSet> out;
    ElementSet current;
    try {
        collect_ideals(p, 0, current, out, cap);
    } catch (const CapHit&) {
        // The probe estimate is heavy-tailed on lopsided trees; hitting the
        // cap already proves the count exceeds it.
        throw CapExceeded(cap, std::max(estimate_ideal_count(p), static_cast<double>(cap) + 1));
    }
    return out;
}

}  // namespace

CapExceeded::CapExceeded(std::size_t cap, double estimate)
    : std::runtime_error("poset has more than " + std::to_string(cap) +
                         " antichains (estimated " + format_estimate(estimate) +
                         "); raise --cap to enumerate it exhaustively"),
      cap_(cap),
      estimate_(estimate) {}

ElementSet max_elements(const Poset& p, const ElementSet& ideal) {
    ElementSet out;
    ideal.for_each([&](std::size_t x) {
        if (!p.upper_covers(x).intersects(ideal)) out.insert(x);
    });
    return out;
}

ElementSet generated_ideal(const Poset& p, const ElementSet& antichain) {
    ElementSet out;
    antichain.for_each([&](std::size_t a) { out |= p.down(a); });
    return out;
}

ElementSet rowmotion_step(const Poset& p, const ElementSet& ideal) {
    // min(P ∖ I): outside elements whose lower covers all lie in I.
    ElementSet next;
    (p.all() - ideal).for_each([&](std::size_t x) {
        if (p.lower_covers(x).is_subset_of(ideal)) next |= p.down(x);
    });
    return next;
}

IdealSet ideal_of_antichain(const AntichainSet& a) {
    return IdealSet::unchecked(a.poset(), generated_ideal(a.poset(), a.members()));
}

AntichainSet antichain_of_ideal(const IdealSet& ideal) {
    return AntichainSet::unchecked(ideal.poset(), max_elements(ideal.poset(), ideal.members()));
}

AntichainSet rowmotion_antichain(const AntichainSet& a) {
    const Poset& p = a.poset();
    const ElementSet below = generated_ideal(p, a.members());
    ElementSet out;
    (p.all() - below).for_each([&](std::size_t x) {
        if (p.lower_covers(x).is_subset_of(below)) out.insert(x);
    });
    return AntichainSet::unchecked(p, out);
}

IdealSet rowmotion_ideal(const IdealSet& ideal) {
    return IdealSet::unchecked(ideal.poset(), rowmotion_step(ideal.poset(), ideal.members()));
}

OrbitReport orbit_of(const IdealSet& start) {
    const Poset& p = start.poset();
    OrbitReport r;
    ElementSet cur = start.members();
    Integer total = 0;
    do {
        r.ideals.push_back(IdealSet::unchecked(p, cur));
        const std::size_t size = max_elements(p, cur).size();
        r.antichain_sizes.push_back(size);
        total += static_cast<unsigned long>(size);
        cur = rowmotion_step(p, cur);
    } while (!(cur == start.members()));
    r.length = r.ideals.size();
    r.average_size = Rational(total, Integer(static_cast<unsigned long>(r.length)));
    r.average_size.canonicalize();
    return r;
}

void for_each_ideal(const Poset& p, const std::function<void(const ElementSet&)>& visit,
                    std::size_t cap) {
    for (const auto& s : sorted_ideals(p, cap)) visit(s);
}

std::vector<IdealSet> enumerate_ideals(const Poset& p, std::size_t cap) {
    std::vector<IdealSet> out;
    for_each_ideal(p, [&](const ElementSet& s) { out.push_back(IdealSet::unchecked(p, s)); }, cap);
    return out;
}

std::size_t count_ideals(const Poset& p, std::size_t cap) { return sorted_ideals(p, cap).size(); }

double estimate_ideal_count(const Poset& p, std::size_t probes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double total = 0;
    for (std::size_t t = 0; t < probes; ++t) {
        ElementSet current;
        double weight = 1;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p.lower_covers(k).is_subset_of(current)) {
                weight *= 2;
                if (rng() & 1U) current.insert(k);
            }
        }
        total += weight;
    }
    return probes == 0 ? 0 : total / static_cast<double>(probes);
}

std::size_t IdealPermutation::index_of(const ElementSet& s) const {
    const auto it = std::lower_bound(ideals.begin(), ideals.end(), s,
                                     [](const ElementSet& a, const ElementSet& b) { return lex_less(a, b); });
    if (it == ideals.end() || !(*it == s)) throw std::logic_error("set is not an enumerated ideal");
    return static_cast<std::size_t>(it - ideals.begin());
}

IdealPermutation rowmotion_permutation(const Poset& p, const EnumerationOptions& opts) {
    IdealPermutation perm;
    perm.ideals = sorted_ideals(p, opts.cap);
    const std::size_t n = perm.ideals.size();
    perm.next.assign(n, 0);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k)
            perm.next[k] = static_cast<std::uint32_t>(perm.index_of(rowmotion_step(p, perm.ideals[k])));
    };
    const std::size_t threads = std::clamp<std::size_t>(opts.threads, 1, 64);
    if (threads == 1 || n < 4096) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t b = std::min(n, t * chunk), e = std::min(n, b + chunk);
            pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return perm;
}

std::vector<OrbitReport> all_orbits(const Poset& p, const EnumerationOptions& opts) {
    const IdealPermutation perm = rowmotion_permutation(p, opts);
    std::vector<char> seen(perm.ideals.size(), 0);
    std::vector<OrbitReport> orbits;
    for (std::size_t seed = 0; seed < perm.ideals.size(); ++seed) {
        if (seen[seed]) continue;
        OrbitReport r;
        Integer total = 0;
        std::size_t k = seed;
        do {
            seen[k] = 1;
            r.ideals.push_back(IdealSet::unchecked(p, perm.ideals[k]));
            const std::size_t size = max_elements(p, perm.ideals[k]).size();
            r.antichain_sizes.push_back(size);
            total += static_cast<unsigned long>(size);
            k = perm.next[k];
        } while (k != seed);
        r.length = r.ideals.size();
        r.average_size = Rational(total, Integer(static_cast<unsigned long>(r.length)));
        r.average_size.canonicalize();
        orbits.push_back(std::move(r));
    }
    return orbits;
}

std::vector<std::size_t> orbit_lengths(const Poset& p, const EnumerationOptions& opts) {
    const IdealPermutation perm = rowmotion_permutation(p, opts);
    std::vector<char> seen(perm.ideals.size(), 0);
    std::vector<std::size_t> lengths;
    for (std::size_t seed = 0; seed < perm.ideals.size(); ++seed) {
        if (seen[seed]) continue;
        std::size_t len = 0;
        for (std::size_t k = seed; !seen[k]; k = perm.next[k]) {
            seen[k] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

Integer operator_order(const Poset& p, const EnumerationOptions& opts) {
    Integer order = 1;
    for (std::size_t len : orbit_lengths(p, opts)) {
        const Integer l(static_cast<unsigned long>(len));
        mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), l.get_mpz_t());
    }
    return order;
}

}  // namespace rowmotion
