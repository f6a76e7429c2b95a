#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rowmotion {

/// Fixed-width set of poset element indices.
///
/// Bit k stands for the element at position k of the poset's linear
/// extension. The width is fixed at compile time so that sets hash and
/// compare in constant time; posets larger than kCapacity are rejected
/// at construction.
class ElementSet {
public:
    static constexpr std::size_t kWords = 2;
    static constexpr std::size_t kCapacity = 64 * kWords;

    constexpr ElementSet() = default;

    static ElementSet prefix(std::size_t count) {
        ElementSet s;
        for (std::size_t w = 0; w < kWords && count > 0; ++w) {
            if (count >= 64) {
                s.words_[w] = ~std::uint64_t{0};
                count -= 64;
            } else {
                s.words_[w] = (std::uint64_t{1} << count) - 1;
                count = 0;
            }
        }
        return s;
    }

    static ElementSet single(std::size_t k) {
        ElementSet s;
        s.insert(k);
        return s;
    }

    bool contains(std::size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1U; }
    void insert(std::size_t k) { words_[k >> 6] |= std::uint64_t{1} << (k & 63); }
    void erase(std::size_t k) { words_[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); }

    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool is_subset_of(const ElementSet& other) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }

    bool intersects(const ElementSet& other) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] & other.words_[w]) return true;
        return false;
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    /// Set difference.
    ElementSet& operator-=(const ElementSet& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    /// Calls f(k) for every member k in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * 64 + bit);
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t k) { out.push_back(k); });
        return out;
    }

    /// Lexicographic order on the bit sequence (bit 0 first, absent < present).
    friend bool lex_less(const ElementSet& a, const ElementSet& b) {
        for (std::size_t w = 0; w < kWords; ++w) {
            const std::uint64_t diff = a.words_[w] ^ b.words_[w];
            if (diff) {
                const std::uint64_t low = diff & (~diff + 1);
                return (b.words_[w] & low) != 0;
            }
        }
        return false;
    }

    /// Bit string of the first `width` elements, element 0 leftmost.
    std::string to_bits(std::size_t width) const {
        std::string s(width, '0');
        for (std::size_t k = 0; k < width; ++k)
            if (contains(k)) s[k] = '1';
        return s;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }

    std::uint64_t word(std::size_t w) const { return words_[w]; }

private:
    std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace rowmotion
