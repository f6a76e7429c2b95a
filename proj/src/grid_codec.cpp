#include "rowmotion/grid_codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rowmotion/constructions.hpp"

namespace rowmotion {

namespace {

using Piece = MarkedSequence::Piece;
using PKind = MarkedSequence::Piece::Kind;

void require_shape(const BinaryWord& w, int m, int n) {
    if (w.zeros() != static_cast<std::size_t>(m) || w.ones() != static_cast<std::size_t>(n))
        throw std::invalid_argument("word " + w.str() + " does not have " + std::to_string(m) + " zeros and " +
                                    std::to_string(n) + " ones");
}

void require_nonempty(const BinaryWord& w) {
    if (w.zeros() == 0 || w.ones() == 0) throw std::invalid_argument("word needs at least one 0 and one 1");
}

/// Block separators of the orbit of w under ψ. zero_sep(j): ones sit between
/// zero j and zero j+1 (zero_sep(0): the word starts with 1). one_sep(j):
/// zeros sit between one j and one j+1, counting ones from the right
/// (one_sep(0): the word ends with 0). Each ψ step retires the first zero and
/// the last one and appends fresh ones, which gives
///   zero_sep(m+i) = !one_sep(i),  one_sep(n+i) = !zero_sep(i).
class Separators {
public:
    explicit Separators(const BinaryWord& w) : m_(static_cast<int>(w.zeros())), n_(static_cast<int>(w.ones())) {
        require_nonempty(w);
        const std::string& s = w.str();
        zero_.assign(static_cast<std::size_t>(m_) + 1, false);
        one_.assign(static_cast<std::size_t>(n_) + 1, false);
        int zeros_seen = 0;
        for (std::size_t k = 0; k < s.size(); ++k)
            if (s[k] == '1') zero_[static_cast<std::size_t>(zeros_seen)] = true;
            else ++zeros_seen;
        int ones_seen = 0;
        for (std::size_t k = s.size(); k-- > 0;)
            if (s[k] == '0') one_[static_cast<std::size_t>(ones_seen)] = true;
            else ++ones_seen;
    }

    bool zero_sep(int j) {
        if (j <= m_) return zero_[static_cast<std::size_t>(j)];
        return !one_sep(j - m_);
    }
    bool one_sep(int j) {
        if (j <= n_) return one_[static_cast<std::size_t>(j)];
        return !zero_sep(j - n_);
    }

private:
    int m_, n_;
    std::vector<bool> zero_, one_;
};

}  // namespace

GridPoset::GridPoset(int m, int n) : product_(m, chain(n)), n_(n) {}

std::vector<int> GridPoset::partition(const IdealSet& ideal) const {
    if (!product_.owns(ideal)) throw std::invalid_argument("ideal does not belong to this grid");
    std::vector<int> lambda;
    for (const ElementSet& c : product_.components(ideal.members())) lambda.push_back(static_cast<int>(c.size()));
    return lambda;
}

IdealSet GridPoset::from_partition(const std::vector<int>& lambda) const {
    if (lambda.size() != static_cast<std::size_t>(m())) throw std::invalid_argument("partition needs m parts");
    std::vector<ElementSet> comps;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] < 0 || lambda[k] > n_ || (k > 0 && lambda[k] > lambda[k - 1]))
            throw std::invalid_argument("not a partition in an m x n box");
        comps.push_back(ElementSet::prefix(static_cast<std::size_t>(lambda[k])));
    }
    return IdealSet::unchecked(poset(), product_.assemble(comps));
}

BinaryWord encode_grid(const GridPoset& grid, const IdealSet& ideal) {
    return word_of_partition(grid.partition(ideal), grid.n());
}

IdealSet decode_grid(const GridPoset& grid, const BinaryWord& w) {
    require_shape(w, grid.m(), grid.n());
    return grid.from_partition(partition_of_word(w.str()));
}

BinaryWord psi(const BinaryWord& w) {
    const std::size_t m = w.zeros(), n = w.ones();
    if (m == 0 || n == 0) return w;
    const auto blocks = one_zero_blocks(w.str());
    const std::size_t s = blocks.s();
    if (s == 1) return BinaryWord(std::string(m, '0') + std::string(n, '1'));
    std::vector<std::pair<int, int>> out;
    for (std::size_t j = 0; j < s; ++j) {
        int zeros = blocks.b[j], ones = blocks.a[j];
        if (j == 0) zeros -= 1, ones += 1;
        if (j == s - 1) zeros += 1, ones -= 1;
        out.emplace_back(zeros, ones);
    }
    return BinaryWord::from_blocks(out);
}

int SizeProfile::size_at(int i) const {
    if (i < 0 || i > m + n) throw std::out_of_range("profile index outside [0, m+n]");
    int size = base;
    for (int j = 1; j <= i; ++j) size += p[static_cast<std::size_t>(j - 1)] + q[static_cast<std::size_t>(j - 1)];
    return size;
}

SizeProfile size_profile(const BinaryWord& w) {
    if (!w.normal_form()) return size_profile_by_rule(w);
    const auto zeros = zero_runs(w.str());
    const auto ones = one_runs(w.str());
    const std::size_t k = zeros.size();

    SizeProfile out;
    out.m = static_cast<int>(w.zeros());
    out.n = static_cast<int>(w.ones());
    out.base = static_cast<int>(k) - 1;
    std::vector<int> a(k), b(k);
    for (std::size_t j = 0; j < k; ++j) {
        a[j] = zeros[j] + (j > 0 ? a[j - 1] : 0);
        b[j] = static_cast<int>(ones[k - 1 - j].size()) + (j > 0 ? b[j - 1] : 0);
    }
    for (std::size_t j = 0; j < k; ++j) {
        out.A.push_back(a[j] + 1);
        out.C.push_back(b[j] + 1);
        if (j + 1 < k) {
            out.B.push_back(out.m + 1 + b[j]);
            out.D.push_back(out.n + 1 + a[j]);
        }
    }
    auto in = [](const std::vector<int>& xs, int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); };
    for (int i = 1; i <= out.m + out.n; ++i) {
        const bool p = (i <= out.m + 1 && !in(out.A, i)) || in(out.B, i);
        const bool q = in(out.C, i) || (i >= out.n + 2 && i <= out.n + out.m && !in(out.D, i));
        out.p.push_back(p ? 1 : 0);
        out.q.push_back(q ? -1 : 0);
    }
    return out;
}

SizeProfile size_profile_by_rule(const BinaryWord& w) {
    Separators sep(w);
    SizeProfile out;
    out.m = static_cast<int>(w.zeros());
    out.n = static_cast<int>(w.ones());
    for (int j = 0; j < out.n; ++j) out.base += sep.one_sep(j) ? 1 : 0;
    for (int i = 1; i <= out.m + out.n; ++i) {
        out.p.push_back(sep.one_sep(out.n + i - 1) ? 1 : 0);
        out.q.push_back(sep.one_sep(i - 1) ? -1 : 0);
    }
    return out;
}

int size_by_formula(const BinaryWord& w, int i) {
    const int period = static_cast<int>(w.size());
    if (period == 0) return 0;
    return size_profile(w).size_at(((i % period) + period) % period);
}

LongSequences long_sequences(const BinaryWord& w) {
    if (!w.normal_form()) throw std::invalid_argument("long sequences need a word that starts with 0 and ends with 1");
    const auto zeros = zero_runs(w.str());
    const auto ones = one_runs(w.str());

    std::vector<Piece> zp;
    auto zero_blocks = [&] {
        for (int z : zeros) {
            zp.push_back({PKind::Run, static_cast<std::size_t>(z)});
            zp.push_back({PKind::Dash, 1});
        }
    };
    zero_blocks();
    for (auto it = ones.rbegin(); it != ones.rend(); ++it) zp.push_back({PKind::Spaced, it->size()});
    zero_blocks();

    std::vector<Piece> op;
    auto one_blocks = [&] {
        for (const auto& o : ones) {
            op.push_back({PKind::Dash, 1});
            op.push_back({PKind::Run, o.size()});
        }
    };
    one_blocks();
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) op.push_back({PKind::Spaced, static_cast<std::size_t>(*it)});
    one_blocks();

    return {MarkedSequence('0', MarkedSequence::Reading::LeftToRight, std::move(zp)),
            MarkedSequence('1', MarkedSequence::Reading::RightToLeft, std::move(op))};
}

LongSequences long_sequences_by_rule(const BinaryWord& w) {
    Separators sep(w);
    const int m = static_cast<int>(w.zeros()), n = static_cast<int>(w.ones());
    std::vector<Piece> zp, op;
    const int zero_total = 2 * m + n, one_total = m + 2 * n;
    if (sep.zero_sep(0)) zp.push_back({PKind::Dash, 1});
    for (int j = 1; j <= zero_total; ++j) {
        zp.push_back({PKind::Run, 1});
        if (sep.zero_sep(j)) zp.push_back({PKind::Dash, 1});
    }
    if (sep.one_sep(one_total)) op.push_back({PKind::Dash, 1});
    for (int j = one_total; j >= 1; --j) {
        op.push_back({PKind::Run, 1});
        if (sep.one_sep(j - 1)) op.push_back({PKind::Dash, 1});
    }
    return {MarkedSequence('0', MarkedSequence::Reading::LeftToRight, std::move(zp)),
            MarkedSequence('1', MarkedSequence::Reading::RightToLeft, std::move(op))};
}

BinaryWord word_from_windows(const LongSequences& seq, int m, int n, int i) {
    return BinaryWord(zigzag(seq.zeros.window(static_cast<std::size_t>(i), static_cast<std::size_t>(m)),
                             seq.ones.window(static_cast<std::size_t>(i), static_cast<std::size_t>(n))));
}

}  // namespace rowmotion
