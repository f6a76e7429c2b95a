#include "rowmotion/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace rowmotion {

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
        if (c != '0' && c != '1') throw std::invalid_argument("binary word contains '" + std::string(1, c) + "'");
}

BinaryWord BinaryWord::from_blocks(const std::vector<std::pair<int, int>>& zero_one_blocks) {
    std::string s;
    for (const auto& [zeros, ones] : zero_one_blocks) {
        if (zeros < 0 || ones < 0) throw std::invalid_argument("negative block length");
        s.append(static_cast<std::size_t>(zeros), '0');
        s.append(static_cast<std::size_t>(ones), '1');
    }
    return BinaryWord(std::move(s));
}

BinaryWord word_of_partition(const std::vector<int>& lambda, int width) {
    const std::size_t m = lambda.size();
    for (std::size_t k = 0; k < m; ++k)
        if (lambda[k] < 0 || lambda[k] > width || (k > 0 && lambda[k] > lambda[k - 1]))
            throw std::invalid_argument("not a partition inside a box of width " + std::to_string(width));
    std::string s;
    for (std::size_t k = m; k-- > 0;) {
        const int below = k + 1 < m ? lambda[k + 1] : 0;
        s.append(static_cast<std::size_t>(lambda[k] - below), '1');
        s.push_back('0');
    }
    s.append(static_cast<std::size_t>(width - (m > 0 ? lambda[0] : 0)), '1');
    return BinaryWord(std::move(s));
}

std::vector<int> partition_of_word(std::string_view w) {
    const auto m = static_cast<std::size_t>(std::count(w.begin(), w.end(), '0'));
    std::vector<int> lambda(m);
    int ones = 0;
    std::size_t zeros = 0;
    for (char c : w) {
        if (c == '0')
            lambda[m - ++zeros] = ones;
        else
            ++ones;
    }
    return lambda;
}

std::size_t BinaryWord::zeros() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '0')); }

std::size_t count_10(std::string_view w) {
    std::size_t n = 0;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] != '0' && w[k + 1] == '0') ++n;
    return n;
}

OneZeroBlocks one_zero_blocks(std::string_view w) {
    OneZeroBlocks out;
    std::size_t pos = 0;
    do {
        int a = 0, b = 0;
        while (pos < w.size() && w[pos] != '0') ++a, ++pos;
        while (pos < w.size() && w[pos] == '0') ++b, ++pos;
        out.a.push_back(a);
        out.b.push_back(b);
    } while (pos < w.size());
    return out;
}

std::vector<int> zero_runs(std::string_view w) {
    std::vector<int> out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] != '0') continue;
        if (k == 0 || w[k - 1] != '0')
            out.push_back(1);
        else
            ++out.back();
    }
    return out;
}

std::vector<std::string> one_runs(std::string_view w) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == '0' || w[k] == '-') continue;
        if (k == 0 || w[k - 1] == '0' || w[k - 1] == '-') out.emplace_back();
        out.back().push_back(w[k]);
    }
    return out;
}

std::string zero_pattern(std::string_view w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == '0')
            out.push_back('0');
        else if (k == 0 || w[k - 1] == '0')
            out.push_back('-');
    }
    return out;
}

std::string one_pattern(std::string_view w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] != '0')
            out.push_back(w[k]);
        else if (k == 0 || w[k - 1] != '0')
            out.push_back('-');
    }
    return out;
}

std::string zigzag(std::string_view zp, std::string_view op) {
    for (char c : zp)
        if (c != '0' && c != '-') throw std::invalid_argument("zero pattern may only contain '0' and '-'");
    for (char c : op)
        if (c != '1' && c != '*' && c != '-') throw std::invalid_argument("one pattern may only contain '1', '*' and '-'");
    if (zp.find("--") != std::string_view::npos || op.find("--") != std::string_view::npos)
        throw std::invalid_argument("patterns may not contain consecutive dashes");

    const auto pieces = one_runs(op);
    const auto zero_blocks = zero_runs(zp);
    const auto zero_dashes = static_cast<std::size_t>(std::count(zp.begin(), zp.end(), '-'));
    const auto one_dashes = static_cast<std::size_t>(std::count(op.begin(), op.end(), '-'));
    if (zero_dashes != pieces.size())
        throw std::invalid_argument("zero pattern has " + std::to_string(zero_dashes) + " dashes but there are " +
                                    std::to_string(pieces.size()) + " one blocks");
    if (one_dashes != zero_blocks.size())
        throw std::invalid_argument("one pattern has " + std::to_string(one_dashes) + " dashes but there are " +
                                    std::to_string(zero_blocks.size()) + " zero blocks");
    if (!zp.empty() && !op.empty() && ((zp.front() == '-') == (op.front() == '-') || (zp.back() == '-') == (op.back() == '-')))
        throw std::invalid_argument("patterns disagree on which symbol starts or ends the word");

    std::string out;
    std::size_t next = 0;
    for (char c : zp) {
        if (c == '0')
            out.push_back('0');
        else
            out += pieces[next++];
    }
    return out;
}

MarkedSequence::MarkedSequence(char symbol, Reading reading, std::vector<Piece> pieces)
    : symbol_(symbol), reading_(reading) {
    for (const Piece& p : pieces) {
        if (p.kind == Piece::Kind::Dash) {
            if (pieces_.empty() || pieces_.back().kind != Piece::Kind::Dash) pieces_.push_back({Piece::Kind::Dash, 1});
        } else if (p.count > 0) {
            pieces_.push_back(p);
        }
    }
    first_symbol_.reserve(pieces_.size());
    for (const Piece& p : pieces_) {
        first_symbol_.push_back(total_);
        if (p.kind != Piece::Kind::Dash) total_ += p.count;
    }
}

std::size_t MarkedSequence::piece_of(std::size_t t) const {
    // Last non-dash piece whose first symbol is <= t.
    auto it = std::upper_bound(first_symbol_.begin(), first_symbol_.end(), t);
    auto k = static_cast<std::size_t>(it - first_symbol_.begin()) - 1;
    while (pieces_[k].kind == Piece::Kind::Dash) --k;
    return k;
}

bool MarkedSequence::dash_at(std::size_t t) const {
    if (pieces_.empty()) return false;
    if (t == 0) return pieces_.front().kind == Piece::Kind::Dash;
    if (t == total_) return pieces_.back().kind == Piece::Kind::Dash;
    const std::size_t left = piece_of(t - 1), right = piece_of(t);
    if (left == right) return pieces_[left].kind == Piece::Kind::Spaced;
    return right - left > 1;  // only dashes can sit between two symbol pieces
}

std::pair<std::size_t, std::size_t> MarkedSequence::text_range(std::size_t i, std::size_t width) const {
    if (width == 0 || i + width > total_)
        throw std::out_of_range("window " + std::to_string(i) + "+" + std::to_string(width) + " exceeds " +
                                std::to_string(total_) + " symbols");
    if (reading_ == Reading::LeftToRight) return {i, i + width - 1};
    return {total_ - i - width, total_ - i - 1};
}

std::string MarkedSequence::window(std::size_t i, std::size_t width) const {
    const auto [lo, hi] = text_range(i, width);
    std::string out;
    if (dash_at(lo)) out.push_back('-');
    for (std::size_t t = lo; t <= hi; ++t) {
        out.push_back(symbol_);
        if (dash_at(t + 1)) out.push_back('-');
    }
    return out;
}

std::size_t MarkedSequence::dashed_count(std::size_t i, std::size_t width) const {
    const auto [lo, hi] = text_range(i, width);
    std::size_t n = 0;
    for (std::size_t t = lo; t <= hi; ++t)
        if (dash_at(t)) ++n;
    return n;
}

std::string MarkedSequence::to_string() const {
    if (total_ == 0) return pieces_.empty() ? "" : "-";
    return window(0, total_);
}

}  // namespace rowmotion
