#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracle.hpp"
#include "rowmotion/constructions.hpp"
#include "rowmotion/grid_codec.hpp"
#include "rowmotion/k_codec.hpp"
#include "rowmotion/rowmotion.hpp"

using namespace rowmotion;

namespace {

// Small (m, n) with m + 2n - 1 <= 9 so subset enumeration stays fast.
std::vector<std::pair<int, int>> small_shapes() {
    std::vector<std::pair<int, int>> out;
    for (int n = 2; 2 * n <= 9; ++n)
        for (int m = 1; m + 2 * n - 1 <= 9; ++m)
            if (m * 2 * n <= 20) out.emplace_back(m, n);
    return out;
}

}  // namespace

TEST_CASE("KProduct components classify every ideal") {
    KProduct k(2, 3);
    const oracle::Order order(k.poset());
    std::size_t full = 0, starred = 0;
    for (oracle::Mask s : order.ideals()) {
        const IdealSet ideal(k.poset(), oracle::from_mask(s));
        CHECK(k.from_components(k.components(ideal)) == ideal);
        (k.is_full_rank(ideal) ? full : starred) += 1;
    }
    // Full-rank ideals are words in B(2, 5); the rest come in dual pairs.
    CHECK(full == oracle::binomial(7, 2));
    CHECK(starred % 2 == 0);
}

TEST_CASE("component dynamics in closed form match rowmotion") {
    SUBCASE("grids and [m] x K full rank") {
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 5; ++n) {
                GridPoset g(m, n);
                for (const IdealSet& ideal : enumerate_ideals(g.poset()))
                    CHECK(full_rank_step(g.partition(ideal), n) == g.partition(rowmotion_ideal(ideal)));
            }
    }
    SUBCASE("non-full-rank [m] x K") {
        for (const auto& [m, n] : small_shapes()) {
            KProduct k(m, n);
            for (const IdealSet& ideal : enumerate_ideals(k.poset())) {
                const auto comps = k.components(ideal);
                if (k.is_full_rank(ideal)) {
                    std::vector<int> ranks;
                    for (const auto& c : comps) ranks.push_back(c.rank);
                    std::vector<KComponent> expected;
                    for (int r : full_rank_step(ranks, 2 * n - 1)) expected.push_back(KComponent::l(r));
                    CHECK(expected == k.components(rowmotion_ideal(ideal)));
                } else if (k.canonical(ideal) == ideal) {
                    CHECK(nonfull_rank_step(comps, n) == k.components(rowmotion_ideal(ideal)));
                }
            }
        }
    }
    CHECK_THROWS_AS(full_rank_step({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(nonfull_rank_step({KComponent::star_prime()}, 2), std::invalid_argument);
    CHECK_THROWS_AS(nonfull_rank_step({KComponent::l(1)}, 2), std::invalid_argument);
}

TEST_CASE("full-rank codec: bijection, equivariance, antichain sizes") {
    for (const auto& [m, n] : small_shapes()) {
        KProduct k(m, n);
        const oracle::Order order(k.poset());
        std::set<std::string> words;
        for (oracle::Mask s : order.ideals()) {
            const IdealSet ideal(k.poset(), oracle::from_mask(s));
            if (!k.is_full_rank(ideal)) {
                CHECK_THROWS_AS(encode_k_full_rank(k, ideal), std::invalid_argument);
                continue;
            }
            const BinaryWord w = encode_k_full_rank(k, ideal);
            words.insert(w.str());
            CHECK(decode_k_full_rank(k, w) == ideal);
            const IdealSet next(k.poset(), oracle::from_mask(order.rowmotion(s)));
            CHECK(k.is_full_rank(next));
            CHECK(encode_k_full_rank(k, next) == psi(w));
            CHECK(count_10(w) + static_cast<std::size_t>(epsilon_n(w, n)) ==
                  static_cast<std::size_t>(oracle::popcount(order.maximal(s))));
        }
        CHECK(words.size() == oracle::binomial(static_cast<unsigned>(m + 2 * n - 1), static_cast<unsigned>(m)));
    }
}

TEST_CASE("epsilon_n") {
    CHECK(epsilon_n(BinaryWord("11100"), 2) == 0);
    CHECK(epsilon_n(BinaryWord("11010"), 2) == 1);
    CHECK(epsilon_n(BinaryWord("1110110"), 3) == 1);
    CHECK_THROWS_AS(epsilon_n(BinaryWord("100"), 2), std::invalid_argument);
}

TEST_CASE("starred words validate their shape") {
    CHECK_NOTHROW(StarredWord("1*0110", 2));
    CHECK_THROWS_AS(StarredWord("*10110", 2), std::invalid_argument);  // star is not the 2nd
    CHECK_THROWS_AS(StarredWord("1*1010", 2), std::invalid_argument);  // not followed by 0
    CHECK_THROWS_AS(StarredWord("1*01x0", 2), std::invalid_argument);
    CHECK_THROWS_AS(StarredWord("1*0100", 2), std::invalid_argument);  // too few ones
    CHECK(StarredWord("1*0110", 2).bar_word() == BinaryWord("110110"));
    CHECK(StarredWord::from_bar_word(BinaryWord("110110"), 2).str() == "1*0110");
}

TEST_CASE("starred codec on the ideal (I_4^2, L_3) of [3] x K_3") {
    KProduct k(3, 4);
    const IdealSet ideal = k.from_components({KComponent::star(), KComponent::star(), KComponent::l(3)});
    // Components read as 4, 4, 3 in a box of width 8.
    const StarredWord w = encode_k_starred(k, ideal);
    CHECK(w.str() == "1110*001111");
    CHECK(decode_k_starred(k, w) == ideal);
    CHECK(encode_k_starred(k, k.dual(ideal)) == w);
}

TEST_CASE("starred codec: bijection on classes, equivariance, sizes, duality") {
    for (const auto& [m, n] : small_shapes()) {
        KProduct k(m, n);
        const oracle::Order order(k.poset());
        std::set<std::string> words;
        for (oracle::Mask s : order.ideals()) {
            const IdealSet ideal(k.poset(), oracle::from_mask(s));
            if (k.is_full_rank(ideal)) {
                CHECK_THROWS_AS(encode_k_starred(k, ideal), std::invalid_argument);
                continue;
            }
            const StarredWord w = encode_k_starred(k, ideal);
            words.insert(w.str());
            CHECK(decode_k_starred(k, w) == k.canonical(ideal));
            CHECK(encode_k_starred(k, k.dual(ideal)) == w);
            const IdealSet next(k.poset(), oracle::from_mask(order.rowmotion(s)));
            CHECK_FALSE(k.is_full_rank(next));
            CHECK(encode_k_starred(k, next) == psi_bar(w));
            CHECK(psi_bar_by_patterns(w) == psi_bar(w));
            CHECK(count_10(w.str()) == static_cast<std::size_t>(oracle::popcount(order.maximal(s))));
            // Ψ commutes with the n <-> n' swap.
            CHECK(rowmotion_ideal(k.dual(ideal)) == k.dual(rowmotion_ideal(ideal)));
        }
        // B̄(m, 2n): place the n-th one before a zero.
        std::size_t expected = 0;
        for (int before = 0; before < m; ++before)  // zeros before the n-th one
            expected += oracle::binomial(static_cast<unsigned>(before + n - 1), static_cast<unsigned>(before)) *
                        oracle::binomial(static_cast<unsigned>(m - 1 - before + n), static_cast<unsigned>(n));
        CHECK(words.size() == expected);
    }
}

TEST_CASE("the p operator") {
    CHECK(p_operator("1-111*-11-1", 4) == "1-11*-111-1");
    CHECK(p_operator("111-1-*-111", 4) == "111-*-1-111");
    CHECK(p_operator("1-1*-1", 2) == "1-*-11");
    CHECK(p_operator("11*", 2) == "1*-1");
    CHECK_THROWS_AS(p_operator("1111", 2), std::invalid_argument);
}

TEST_CASE("psi_bar has order exactly m+2n-1 and the long 0-sequence tracks its zeros") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m + 2 * n - 1 <= 11; ++m) {
            // Every starred word, by placing zeros around the fixed star.
            std::string base(static_cast<std::size_t>(m), '0');
            base.append(static_cast<std::size_t>(2 * n), '1');
            std::size_t order = 1;
            do {
                const BinaryWord bar(base);
                if (epsilon_n(bar, n) == 0) continue;
                const StarredWord w = StarredWord::from_bar_word(bar, n);
                StarredWord cur = psi_bar(w);
                std::size_t len = 1;
                while (!(cur == w)) cur = psi_bar(cur), ++len;
                order = std::lcm(order, len);
                CHECK((m + 2 * n - 1) % len == 0);

                if (w.str().front() != '0' || w.str().back() == '0') continue;
                const MarkedSequence seq = long_zero_sequence_k(w);
                CHECK(seq.symbol_count() == static_cast<std::size_t>(2 * m + 2 * n - 1));
                cur = w;
                std::size_t total = 0;
                for (int i = 0; i <= m + 2 * n - 1; ++i) {
                    const auto ui = static_cast<std::size_t>(i), um = static_cast<std::size_t>(m);
                    CHECK(seq.window(ui, um) == zero_pattern(cur.str()));
                    CHECK(seq.dashed_count(ui, um) == count_10(cur.str()));
                    if (i >= 1) total += count_10(cur.str());
                    cur = psi_bar(cur);
                }
                CHECK(total == static_cast<std::size_t>(2 * m * n));
            } while (std::next_permutation(base.begin(), base.end()));
            // B̄(1, 2n) is the single word 1^n 0 1^n, fixed by psi_bar.
            CHECK(order == static_cast<std::size_t>(m == 1 ? 1 : m + 2 * n - 1));
        }
}

TEST_CASE("long 0-sequence with a lone star block") {
    // b_k = 1: the (-0)^{b_k - 1} block is empty.
    const StarredWord w("010*011", 2);
    CHECK(long_zero_sequence_k(w).to_string() == "0-0-0-0-000-0-0-");
    CHECK_THROWS_AS(long_zero_sequence_k(StarredWord("1*0110", 2)), std::invalid_argument);
}
