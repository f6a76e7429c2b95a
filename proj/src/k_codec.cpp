#include "rowmotion/k_codec.hpp"

#include <algorithm>
#include <stdexcept>

#include "rowmotion/constructions.hpp"

namespace rowmotion {

namespace {

using Kind = KComponent::Kind;

Poset k_factor(int n) {
    if (n < 2) throw std::invalid_argument("K_{n-1} needs n >= 2");
    return k_poset(n - 1);
}

std::size_t nth_one(std::string_view w, int n) {
    int seen = 0;
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] != '0' && ++seen == n) return k;
    throw std::invalid_argument("word has fewer than " + std::to_string(n) + " ones");
}

}  // namespace

KProduct::KProduct(int m, int n) : product_(m, k_factor(n)), n_(n) {
    mid_ = *product_.factor().find_label(std::to_string(n));
    mid_prime_ = *product_.factor().find_label(std::to_string(n) + "'");
}

ElementSet KProduct::component_set(const KComponent& c) const {
    const Poset& f = product_.factor();
    switch (c.kind) {
        case Kind::Rank:
            if (c.rank < 0 || c.rank > 2 * n_ - 1) throw std::invalid_argument("rank out of range");
            return f.rank_ideal(c.rank);
        case Kind::Star: return f.rank_ideal(n_ - 1) | ElementSet::single(mid_);
        case Kind::StarPrime: return f.rank_ideal(n_ - 1) | ElementSet::single(mid_prime_);
    }
    return {};
}

std::vector<KComponent> KProduct::components(const IdealSet& ideal) const {
    if (!product_.owns(ideal)) throw std::invalid_argument("ideal does not belong to [m] x K");
    std::vector<KComponent> out;
    for (const ElementSet& c : product_.components(ideal.members())) {
        const bool a = c.contains(mid_), b = c.contains(mid_prime_);
        const int size = static_cast<int>(c.size());
        if (a && !b)
            out.push_back(KComponent::star());
        else if (b && !a)
            out.push_back(KComponent::star_prime());
        else
            out.push_back(KComponent::l(a ? size - 1 : size));
    }
    return out;
}

IdealSet KProduct::from_components(const std::vector<KComponent>& tuple) const {
    std::vector<ElementSet> comps;
    for (const KComponent& c : tuple) comps.push_back(component_set(c));
    return IdealSet(poset(), product_.assemble(comps));
}

bool KProduct::is_full_rank(const IdealSet& ideal) const {
    const auto comps = components(ideal);
    return std::all_of(comps.begin(), comps.end(), [](const KComponent& c) { return c.kind == Kind::Rank; });
}

IdealSet KProduct::dual(const IdealSet& ideal) const {
    auto comps = components(ideal);
    for (KComponent& c : comps) {
        if (c.kind == Kind::Star)
            c = KComponent::star_prime();
        else if (c.kind == Kind::StarPrime)
            c = KComponent::star();
    }
    return from_components(comps);
}

IdealSet KProduct::canonical(const IdealSet& ideal) const {
    const auto comps = components(ideal);
    const bool primed =
        std::any_of(comps.begin(), comps.end(), [](const KComponent& c) { return c.kind == Kind::StarPrime; });
    return primed ? dual(ideal) : ideal;
}

BinaryWord encode_k_full_rank(const KProduct& k, const IdealSet& ideal) {
    std::vector<int> lambda;
    for (const KComponent& c : k.components(ideal)) {
        if (c.kind != Kind::Rank) throw std::invalid_argument("ideal is not full rank");
        lambda.push_back(c.rank);
    }
    return word_of_partition(lambda, 2 * k.n() - 1);
}

IdealSet decode_k_full_rank(const KProduct& k, const BinaryWord& w) {
    if (w.zeros() != static_cast<std::size_t>(k.m()) || w.ones() != static_cast<std::size_t>(2 * k.n() - 1))
        throw std::invalid_argument("word " + w.str() + " does not have m zeros and 2n-1 ones");
    std::vector<KComponent> tuple;
    for (int j : partition_of_word(w.str())) tuple.push_back(KComponent::l(j));
    return k.from_components(tuple);
}

int epsilon_n(const BinaryWord& w, int n) {
    const std::size_t at = nth_one(w.str(), n);
    return at + 1 < w.size() && w[at + 1] == '0' ? 1 : 0;
}

StarredWord::StarredWord(std::string symbols, int n) : symbols_(std::move(symbols)), n_(n) {
    if (n < 2) throw std::invalid_argument("starred words need n >= 2");
    std::size_t stars = 0, ones = 0;
    for (char c : symbols_) {
        if (c == '*')
            ++stars;
        else if (c == '1')
            ++ones;
        else if (c != '0')
            throw std::invalid_argument("starred word contains '" + std::string(1, c) + "'");
    }
    if (stars != 1 || ones != static_cast<std::size_t>(2 * n - 1))
        throw std::invalid_argument("starred word needs one '*' and " + std::to_string(2 * n - 1) + " ones");
    const std::size_t at = nth_one(symbols_, n);
    if (symbols_[at] != '*') throw std::invalid_argument("'*' must be the " + std::to_string(n) + "-th non-zero symbol");
    if (at + 1 >= symbols_.size() || symbols_[at + 1] != '0') throw std::invalid_argument("'*' must be followed by 0");
}

StarredWord StarredWord::from_bar_word(const BinaryWord& w, int n) {
    std::string s = w.str();
    s[nth_one(s, n)] = '*';
    return StarredWord(std::move(s), n);
}

int StarredWord::m() const { return static_cast<int>(std::count(symbols_.begin(), symbols_.end(), '0')); }

BinaryWord StarredWord::bar_word() const {
    std::string s = symbols_;
    std::replace(s.begin(), s.end(), '*', '1');
    return BinaryWord(std::move(s));
}

StarredWord encode_k_starred(const KProduct& k, const IdealSet& ideal) {
    std::vector<int> lambda;
    bool starred = false;
    for (const KComponent& c : k.components(ideal)) {
        if (c.kind == Kind::Rank) {
            lambda.push_back(c.rank < k.n() ? c.rank : c.rank + 1);
        } else {
            lambda.push_back(k.n());
            starred = true;
        }
    }
    if (!starred) throw std::invalid_argument("ideal is full rank");
    return StarredWord::from_bar_word(word_of_partition(lambda, 2 * k.n()), k.n());
}

IdealSet decode_k_starred(const KProduct& k, const StarredWord& w) {
    if (w.n() != k.n() || w.m() != k.m()) throw std::invalid_argument("starred word has the wrong shape");
    std::vector<KComponent> tuple;
    for (int t : partition_of_word(w.str())) {
        if (t < k.n())
            tuple.push_back(KComponent::l(t));
        else if (t == k.n())
            tuple.push_back(KComponent::star());
        else
            tuple.push_back(KComponent::l(t - 1));
    }
    return k.from_components(tuple);
}

StarredWord psi_bar(const StarredWord& w) {
    const int n = w.n();
    const auto blocks = one_zero_blocks(w.str());
    const std::size_t s = blocks.s();
    const auto& a = blocks.a;
    const auto& b = blocks.b;

    std::size_t i = 0;  // 1-based block index with a_1 + ... + a_i = n
    for (int sum = 0; i < s && sum < n;) sum += a[i++];

    std::vector<int> zeros(b), ones(a);
    zeros.front() -= 1;
    zeros.back() += 1;
    if (i == 1) {
        // The new 1 lands in block 2; the last block still loses one.
        if (s == 2) {
            // 0^{b_1-1} 1^{a_1} 0^{b_2+1} 1^{a_2}
        } else {
            ones[1] += 1;
            ones.back() -= 1;
        }
    } else if (a[i - 1] == 1) {
        ones.front() += 1;
        ones.back() -= 1;
    } else if (i < s - 1) {
        ones.front() += 1;
        ones[i - 1] -= 1;
        ones[i] += 1;
        ones.back() -= 1;
    } else {
        ones.front() += 1;
        ones[i - 1] -= 1;
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t j = 0; j < s; ++j) pairs.emplace_back(zeros[j], ones[j]);
    return StarredWord::from_bar_word(BinaryWord::from_blocks(pairs), n);
}

std::string p_operator(std::string_view one_pattern, int n) {
    std::string s(one_pattern);
    const std::size_t star = s.find('*');
    if (star == std::string::npos) throw std::invalid_argument("one pattern has no '*'");
    int seen = 0;
    std::size_t target = std::string::npos;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] == '1' && ++seen == n) {
            target = k;
            break;
        }
    if (target == std::string::npos) throw std::invalid_argument("one pattern has fewer than n ones");
    std::swap(s[star], s[target]);
    const std::size_t at = target;  // '*' now sits here
    if (at + 1 < s.size() && s[at + 1] == '1') {
        s.erase(at + 1, 1);
        const std::size_t dash = s.find('-', at);
        if (dash == std::string::npos)
            s += "-1";
        else
            s.insert(dash + 1, "1");
    }
    return s;
}

StarredWord psi_bar_by_patterns(const StarredWord& w) {
    const auto blocks = one_zero_blocks(w.str());
    const std::size_t s = blocks.s();

    // One pattern: add a 1 on the left, drop the last 1, then apply p.
    std::vector<std::string> segments = one_runs(w.str());
    if (blocks.a.front() > 0)
        segments.front().insert(0, "1");
    else
        segments.insert(segments.begin(), "1");
    segments.back().pop_back();
    if (segments.back().empty()) segments.pop_back();
    std::string joined;
    for (std::size_t k = 0; k < segments.size(); ++k) joined += (k ? "-" : "") + segments[k];
    joined = p_operator(joined, w.n());
    const std::size_t count = one_runs(joined).size();

    // Zero pattern: blocks b_1-1, b_2, ..., b_{s-1}, b_s+1 with a one block
    // between consecutive zero blocks and possibly one at the end.
    if (count != s && count + 1 != s)
        throw std::logic_error("one pattern of " + w.str() + " lost track of its blocks");
    const bool ends_with_one = count == s;
    const int first = blocks.b.front() - 1;
    std::string zp(static_cast<std::size_t>(first), '0');
    for (std::size_t j = 1; j < s; ++j) zp += "-" + std::string(static_cast<std::size_t>(blocks.b[j] + (j == s - 1 ? 1 : 0)), '0');
    if (ends_with_one) zp += "-";

    const std::string op = (first > 0 ? "-" : "") + joined + (ends_with_one ? "" : "-");
    return StarredWord(zigzag(zp, op), w.n());
}

MarkedSequence long_zero_sequence_k(const StarredWord& w) {
    const std::string& str = w.str();
    if (str.front() != '0' || str.back() != '1')
        throw std::invalid_argument("long 0-sequence needs a word that starts with 0 and ends with 1");
    const auto zeros = zero_runs(str);
    const auto ones = one_runs(str);
    std::size_t k = 0;
    while (ones[k].back() != '*') ++k;

    using Piece = MarkedSequence::Piece;
    using PKind = Piece::Kind;
    std::vector<Piece> pieces;
    auto zero_blocks = [&] {
        for (int z : zeros) {
            pieces.push_back({PKind::Run, static_cast<std::size_t>(z)});
            pieces.push_back({PKind::Dash, 1});
        }
    };
    zero_blocks();
    for (std::size_t j = ones.size(); j-- > k + 1;) pieces.push_back({PKind::Spaced, ones[j].size()});
    if (ones[k].size() > 1) {
        pieces.push_back({PKind::Dash, 1});
        pieces.push_back({PKind::Spaced, ones[k].size() - 1});
    }
    for (std::size_t j = k; j-- > 0;) pieces.push_back({PKind::Spaced, ones[j].size()});
    zero_blocks();
    return MarkedSequence('0', MarkedSequence::Reading::LeftToRight, std::move(pieces));
}

}  // namespace rowmotion
