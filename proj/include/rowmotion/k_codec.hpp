#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rowmotion/chain_product.hpp"
#include "rowmotion/word.hpp"

namespace rowmotion {

/// [m] × K_{n-1}. Every ideal splits into components I_1 ⊇ ... ⊇ I_m, each a
/// rank ideal L_j (0 <= j <= 2n-1) or one of I_n, I_n'. An ideal is full rank
/// when every component is a rank ideal.
class KProduct {
public:
    /// Requires m >= 1 and n >= 2.
    KProduct(int m, int n);

    int m() const { return product_.m(); }
    int n() const { return n_; }
    const Poset& poset() const { return product_.poset(); }
    const ChainProduct& product() const { return product_; }

    std::vector<KComponent> components(const IdealSet& ideal) const;
    IdealSet from_components(const std::vector<KComponent>& tuple) const;

    bool is_full_rank(const IdealSet& ideal) const;

    /// Swaps n and n' in every component: the order automorphism of K.
    IdealSet dual(const IdealSet& ideal) const;
    /// The member of {I, dual(I)} whose non-rank components are I_n.
    IdealSet canonical(const IdealSet& ideal) const;

private:
    ElementSet component_set(const KComponent& c) const;

    ChainProduct product_;
    int n_;
    std::size_t mid_ = 0, mid_prime_ = 0;  // factor indices of n and n'
};

/// Full-rank ideals as words with m zeros and 2n-1 ones, exactly as for a
/// grid with component L_j read as λ = j. Throws std::invalid_argument on an
/// ideal that is not full rank.
BinaryWord encode_k_full_rank(const KProduct& k, const IdealSet& ideal);
IdealSet decode_k_full_rank(const KProduct& k, const BinaryWord& w);

/// 1 when the n-th 1 of w is immediately followed by 0, else 0.
int epsilon_n(const BinaryWord& w, int n);

/// A word with m zeros, 2n-1 ones and one '*' in place of the n-th symbol
/// that is not a 0, where that symbol is immediately followed by 0. These
/// encode the non-full-rank ideals up to the n/n' symmetry.
class StarredWord {
public:
    /// Throws std::invalid_argument unless the string has the shape above.
    StarredWord(std::string symbols, int n);
    /// From a word with m zeros and 2n ones whose n-th 1 is followed by 0.
    static StarredWord from_bar_word(const BinaryWord& w, int n);

    const std::string& str() const { return symbols_; }
    int n() const { return n_; }
    int m() const;
    /// The underlying word with '*' read as 1.
    BinaryWord bar_word() const;

    friend bool operator==(const StarredWord&, const StarredWord&) = default;

private:
    std::string symbols_;
    int n_;
};

/// The non-rank components read as rank n between L_{n-1} and L_n; the word
/// has 2n letters to the right of the zeros' partition. Throws
/// std::invalid_argument on a full-rank ideal.
StarredWord encode_k_starred(const KProduct& k, const IdealSet& ideal);
/// Decodes to the I_n representative.
IdealSet decode_k_starred(const KProduct& k, const StarredWord& w);

/// The word map conjugate to rowmotion on the I_n representatives, by the
/// five-case closed form on 1^{a_1}0^{b_1}...1^{a_s}0^{b_s} where
/// a_1 + ... + a_i = n.
StarredWord psi_bar(const StarredWord& w);

/// The same map through the zero/one patterns: the zeros move as under ψ;
/// the one pattern gains a 1 on the left, loses its last 1, and then the
/// operator p swaps '*' with the n-th 1 and pushes the 1 that follows '*'
/// into the next block.
StarredWord psi_bar_by_patterns(const StarredWord& w);

/// The operator p on a one pattern such as "11-1*-111".
std::string p_operator(std::string_view one_pattern, int n);

/// Long 0-sequence of a starred word in normal form (starts with 0, ends
/// with 1). Window i of width m, 0 <= i <= m+2n-1, is the zero pattern
/// of psi_bar^i(w).
MarkedSequence long_zero_sequence_k(const StarredWord& w);

}  // namespace rowmotion
