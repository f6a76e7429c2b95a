#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rowmotion {

/// A word over {0, 1}. Positions are 0-based in the API.
class BinaryWord {
public:
    BinaryWord() = default;
    /// Throws std::invalid_argument on any symbol other than '0' or '1'.
    explicit BinaryWord(std::string bits);
    static BinaryWord from_blocks(const std::vector<std::pair<int, int>>& zero_one_blocks);

    const std::string& str() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    char operator[](std::size_t k) const { return bits_[k]; }
    std::size_t zeros() const;
    std::size_t ones() const { return size() - zeros(); }

    /// Starts with 0 and ends with 1.
    bool normal_form() const { return !bits_.empty() && bits_.front() == '0' && bits_.back() == '1'; }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
    std::string bits_;
};

/// The word with m = lambda.size() zeros and `width` ones whose k-th zero
/// from the right is preceded by lambda[k-1] ones (lambda non-increasing).
BinaryWord word_of_partition(const std::vector<int>& lambda, int width);
/// Inverse of word_of_partition: lambda[k-1] = ones before the k-th zero
/// from the right. '*' counts as a 1.
std::vector<int> partition_of_word(std::string_view w);

/// Number of occurrences of the factor "10"; also accepts '*' as a 1.
std::size_t count_10(std::string_view w);
inline std::size_t count_10(const BinaryWord& w) { return count_10(w.str()); }

/// The decomposition w = 1^{a_1} 0^{b_1} 1^{a_2} 0^{b_2} ... 1^{a_s} 0^{b_s}
/// with a_1, b_s >= 0 and every other exponent positive. '*' counts as a 1.
struct OneZeroBlocks {
    std::vector<int> a;
    std::vector<int> b;
    std::size_t s() const { return a.size(); }
};
OneZeroBlocks one_zero_blocks(std::string_view w);

/// Maximal runs of 0 (left to right) and the dash-separated pieces of the
/// rest, e.g. "0011101111" -> zeros {2, 1}, ones {"111", "1111"}.
std::vector<int> zero_runs(std::string_view w);
std::vector<std::string> one_runs(std::string_view w);

/// "0-0-" style pattern of a word: each zero block kept, each one block
/// replaced by a single dash. Symmetric for ones.
std::string zero_pattern(std::string_view w);
std::string one_pattern(std::string_view w);

/// Interleaves a zero pattern with the pieces of a one pattern: the k-th
/// dash of zero_pattern becomes the k-th piece of one_pattern (pieces may
/// contain '*'). Throws std::invalid_argument if the two patterns do not
/// describe the same block structure.
std::string zigzag(std::string_view zero_pattern, std::string_view one_pattern);

/// A long sequence of one symbol with dashes, stored as blocks and expanded
/// only inside requested windows.
///
/// Pieces read left to right in the text. A Run of length c is c adjacent
/// symbols; a Spaced piece of length c is c symbols with a dash between
/// consecutive ones ([0-0]_c). Two consecutive non-dash pieces join without a
/// dash. Symbols are numbered 1.. in reading order, which is right to left for
/// a sequence of ones.
class MarkedSequence {
public:
    enum class Reading { LeftToRight, RightToLeft };
    struct Piece {
        enum class Kind { Dash, Run, Spaced };
        Kind kind;
        std::size_t count;
        friend bool operator==(const Piece&, const Piece&) = default;
    };

    MarkedSequence(char symbol, Reading reading, std::vector<Piece> pieces);

    char symbol() const { return symbol_; }
    Reading reading() const { return reading_; }
    std::size_t symbol_count() const { return total_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    std::string to_string() const;

    /// Symbols i+1 .. i+width in reading order, written left to right as in
    /// the text, including an adjacent dash on either side when present.
    std::string window(std::size_t i, std::size_t width) const;

    /// Number of symbols among i+1 .. i+width that have a dash immediately to
    /// their left in the text ("-0" occurrences of a zero window).
    std::size_t dashed_count(std::size_t i, std::size_t width) const;

private:
    // Dash between textual symbols t-1 and t (t = 0: before the first,
    // t = total: after the last).
    bool dash_at(std::size_t t) const;
    std::size_t piece_of(std::size_t t) const;
    std::pair<std::size_t, std::size_t> text_range(std::size_t i, std::size_t width) const;

    char symbol_;
    Reading reading_;
    std::vector<Piece> pieces_;
    std::vector<std::size_t> first_symbol_;  // textual index of each piece's first symbol
    std::size_t total_ = 0;
};

}  // namespace rowmotion
