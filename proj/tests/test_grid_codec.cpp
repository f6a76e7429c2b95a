#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracle.hpp"
#include "rowmotion/grid_codec.hpp"
#include "rowmotion/rowmotion.hpp"

using namespace rowmotion;

namespace {

const std::vector<std::string> kTable = {"0101110111", "1010111011", "1101011101", "1110101110", "1111010011",
                                         "1111100101", "0111111010", "1011111100", "1100011111", "0011101111"};

std::vector<int> support(const std::vector<int>& f) {
    std::vector<int> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) out.push_back(static_cast<int>(i) + 1);
    return out;
}

// All words with m zeros and n ones.
std::vector<BinaryWord> all_words(int m, int n) {
    std::vector<BinaryWord> out;
    std::string s(static_cast<std::size_t>(m), '0');
    s.append(static_cast<std::size_t>(n), '1');
    do out.emplace_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

}  // namespace

TEST_CASE("binary words reject foreign symbols") {
    CHECK_THROWS_AS(BinaryWord("0120"), std::invalid_argument);
    CHECK(BinaryWord("0011").zeros() == 2);
    CHECK(BinaryWord("0011").normal_form());
    CHECK_FALSE(BinaryWord("1001").normal_form());
}

TEST_CASE("count_10 counts descents") {
    CHECK(count_10(BinaryWord("000111")) == 0);
    CHECK(count_10(BinaryWord("1101011101")) == 3);
    CHECK(count_10(BinaryWord("10110")) == 2);
}

TEST_CASE("three ideals of [2]x[3] and their words") {
    GridPoset g(2, 3);
    for (const char* w : {"01101", "10110", "11001"}) {
        const IdealSet ideal = decode_grid(g, BinaryWord(w));
        CHECK(encode_grid(g, ideal) == BinaryWord(w));
    }
    CHECK(g.partition(decode_grid(g, BinaryWord("01101"))) == std::vector<int>{2, 0});
    CHECK(g.partition(decode_grid(g, BinaryWord("10110"))) == std::vector<int>{3, 1});
    CHECK(g.partition(decode_grid(g, BinaryWord("11001"))) == std::vector<int>{2, 2});
}

TEST_CASE("empty and full ideals") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            GridPoset g(m, n);
            const std::string zeros(static_cast<std::size_t>(m), '0'), ones(static_cast<std::size_t>(n), '1');
            CHECK(encode_grid(g, IdealSet::empty(g.poset())) == BinaryWord(zeros + ones));
            CHECK(encode_grid(g, IdealSet::full(g.poset())) == BinaryWord(ones + zeros));
            CHECK(psi(BinaryWord(ones + zeros)) == BinaryWord(zeros + ones));
        }
}

TEST_CASE("decode rejects wrong shape and foreign ideals") {
    GridPoset g(2, 3);
    CHECK_THROWS_AS(decode_grid(g, BinaryWord("0011")), std::invalid_argument);
    GridPoset other(3, 2);
    CHECK_THROWS_AS(encode_grid(g, IdealSet::empty(other.poset())), std::invalid_argument);
}

TEST_CASE("grid codec is a bijection that conjugates rowmotion") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n + m <= 8; ++n) {
            GridPoset g(m, n);
            const oracle::Order order(g.poset());
            const auto ideals = order.ideals();
            CHECK(ideals.size() == oracle::binomial(static_cast<unsigned>(m + n), static_cast<unsigned>(m)));
            std::set<std::string> words;
            for (oracle::Mask s : ideals) {
                const IdealSet ideal(g.poset(), oracle::from_mask(s));
                const BinaryWord w = encode_grid(g, ideal);
                words.insert(w.str());
                CHECK(decode_grid(g, w) == ideal);
                CHECK(count_10(w) == static_cast<std::size_t>(oracle::popcount(order.maximal(s))));
                const IdealSet next(g.poset(), oracle::from_mask(order.rowmotion(s)));
                CHECK(encode_grid(g, next) == psi(w));
            }
            CHECK(words.size() == ideals.size());
        }
}

TEST_CASE("worked example on [3]x[7]") {
    BinaryWord w("0011101111");
    for (const auto& row : kTable) {
        w = psi(w);
        CHECK(w.str() == row);
    }
    const SizeProfile profile = size_profile(BinaryWord("0011101111"));
    CHECK(support(profile.p) == std::vector<int>{1, 2, 8});
    CHECK(support(profile.q) == std::vector<int>{5, 8, 9});
    CHECK(profile.base == 1);
    for (int i = 1; i <= 10; ++i)
        CHECK(size_by_formula(BinaryWord("0011101111"), i) ==
              static_cast<int>(count_10(BinaryWord(kTable[static_cast<std::size_t>(i - 1)]))));
}

TEST_CASE("worked example: long sequences and window reconstruction") {
    const BinaryWord w("0011101111");
    const LongSequences seq = long_sequences(w);
    CHECK(seq.zeros.to_string() == "00-0-0-0-0-00-0-000-0-");
    CHECK(seq.ones.to_string() == "-111-111111-1-111-1111");
    CHECK(seq.zeros.symbol_count() == 13);
    CHECK(seq.ones.symbol_count() == 17);
    CHECK(seq.zeros.window(3, 3) == "-0-0-0-");
    CHECK(seq.ones.window(3, 7) == "11-1-111-1");
    CHECK(zigzag("-0-0-0-", "11-1-111-1") == "1101011101");
    CHECK(seq.zeros.window(10, 3) == "00-0-");
    CHECK(seq.ones.window(10, 7) == "-111-1111");
    CHECK(zigzag("00-0-", "-111-1111") == "0011101111");
    CHECK(word_from_windows(seq, 3, 7, 3) == BinaryWord("1101011101"));
}

TEST_CASE("closed-form profile and sequences agree with the separator rule") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; m + n <= 10; ++n)
            for (const BinaryWord& w : all_words(m, n)) {
                const SizeProfile rule = size_profile_by_rule(w);
                if (w.normal_form()) {
                    CHECK(size_profile(w) == rule);
                    const LongSequences a = long_sequences(w);
                    const LongSequences b = long_sequences_by_rule(w);
                    CHECK(a.zeros.to_string() == b.zeros.to_string());
                    CHECK(a.ones.to_string() == b.ones.to_string());
                }
                // P(i) = -Q(i+n) for i <= m.
                for (int i = 1; i <= m; ++i)
                    CHECK(rule.p[static_cast<std::size_t>(i - 1)] == -rule.q[static_cast<std::size_t>(i + n - 1)]);
            }
}

TEST_CASE("size formula and windows follow the dynamics for all four boundary cases") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; m + n <= 9; ++n)
            for (const BinaryWord& w : all_words(m, n)) {
                const LongSequences seq = long_sequences_by_rule(w);
                BinaryWord cur = w;
                int total = 0;
                for (int i = 0; i <= m + n; ++i) {
                    CHECK(size_by_formula(w, i) == static_cast<int>(count_10(cur)));
                    CHECK(seq.zeros.dashed_count(static_cast<std::size_t>(i), static_cast<std::size_t>(m)) == count_10(cur));
                    CHECK(word_from_windows(seq, m, n, i) == cur);
                    if (i >= 1) total += size_by_formula(w, i);
                    cur = psi(cur);
                }
                CHECK(cur == psi(w));  // ψ^{m+n+1} = ψ
                CHECK(total == m * n);
            }
}

TEST_CASE("psi has order exactly m+n") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; m + n <= 9; ++n) {
            std::size_t order = 1;
            for (const BinaryWord& w : all_words(m, n)) {
                BinaryWord cur = psi(w);
                std::size_t len = 1;
                while (!(cur == w)) cur = psi(cur), ++len;
                CHECK((m + n) % len == 0);
                order = std::lcm(order, len);
            }
            CHECK(order == static_cast<std::size_t>(m + n));
        }
}

TEST_CASE("zigzag rejects inconsistent patterns") {
    CHECK_THROWS_AS(zigzag("0-0", "11-1"), std::invalid_argument);
    CHECK_THROWS_AS(zigzag("-0-", "-1-"), std::invalid_argument);
    CHECK_THROWS_AS(zigzag("0--0", "1"), std::invalid_argument);
    CHECK(zigzag("0-0", "-11-") == "0110");
}

TEST_CASE("long sequences require the normal form") {
    CHECK_THROWS_AS(long_sequences(BinaryWord("1001")), std::invalid_argument);
    CHECK_THROWS_AS(long_sequences_by_rule(BinaryWord("000")), std::invalid_argument);
    const auto seq = long_sequences(BinaryWord("01"));
    CHECK_THROWS_AS(seq.zeros.window(2, 2), std::out_of_range);
}
