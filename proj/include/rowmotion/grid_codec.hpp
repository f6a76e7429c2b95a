#pragma once

#include <cstddef>
#include <vector>

#include "rowmotion/chain_product.hpp"
#include "rowmotion/word.hpp"

namespace rowmotion {

/// [m] × [n] with the word encoding of its ideals.
class GridPoset {
public:
    GridPoset(int m, int n);

    int m() const { return product_.m(); }
    int n() const { return n_; }
    const Poset& poset() const { return product_.poset(); }
    const ChainProduct& product() const { return product_; }

    /// Index of (i, j), 1 <= i <= m, 1 <= j <= n.
    std::size_t element(int i, int j) const { return product_.element(i, static_cast<std::size_t>(j - 1)); }

    /// The partition λ_1 >= ... >= λ_m with component i equal to L_{λ_i}.
    std::vector<int> partition(const IdealSet& ideal) const;
    IdealSet from_partition(const std::vector<int>& lambda) const;

private:
    ChainProduct product_;
    int n_;
};

/// Θ: the word with m zeros and n ones whose k-th zero from the right is
/// preceded by exactly λ_k ones. ∅ maps to 0^m 1^n and the full ideal to
/// 1^n 0^m. Throws std::invalid_argument if the ideal is on another poset.
BinaryWord encode_grid(const GridPoset& grid, const IdealSet& ideal);
/// Inverse of encode_grid; throws std::invalid_argument on a word with the
/// wrong number of zeros or ones.
IdealSet decode_grid(const GridPoset& grid, const BinaryWord& w);

/// The word map conjugate to rowmotion:
///   1^n 0^m -> 0^m 1^n, and otherwise
///   1^{a_1}0^{b_1}...1^{a_s}0^{b_s} -> 0^{b_1-1}1^{a_1+1}0^{b_2}1^{a_2}...0^{b_s+1}1^{a_s-1}.
BinaryWord psi(const BinaryWord& w);

/// Exact antichain sizes along the ψ-orbit of a word:
///   |Γ(ψ^i w)| = base + Σ_{j<=i} (P(j) + Q(j)),   0 <= i <= m+n,
/// with P(j) in {0, 1} and Q(j) in {-1, 0}.
struct SizeProfile {
    int m = 0;
    int n = 0;
    int base = 0;
    std::vector<int> p;  // p[j-1] = P(j)
    std::vector<int> q;  // q[j-1] = Q(j)

    /// Closed-form support sets (normal-form words only, empty otherwise):
    /// P is 1 on ([1, m+1] \ A) ∪ B and Q is -1 on C ∪ ([n+2, n+m] \ D).
    std::vector<int> A, B, C, D;

    int size_at(int i) const;
    friend bool operator==(const SizeProfile& x, const SizeProfile& y) {
        return x.m == y.m && x.n == y.n && x.base == y.base && x.p == y.p && x.q == y.q;
    }
};

/// Closed form for a normal-form word 0^{a_1}1^{b_k-b_{k-1}}...0^{a_k-a_{k-1}}1^{b_1};
/// any other word goes through size_profile_by_rule.
SizeProfile size_profile(const BinaryWord& w);

/// The same profile for any word, from the separator recurrences that drive
/// ψ: one block boundary of the zeros and ones is shifted in per step.
SizeProfile size_profile_by_rule(const BinaryWord& w);

/// |Γ(Θ^{-1}(ψ^i w))| read from the profile.
int size_by_formula(const BinaryWord& w, int i);

/// The long 0- and 1-sequences of a normal-form word. Window i of width m
/// (zeros) or n (ones) is the zero or one pattern of ψ^i(w), 0 <= i <= m+n.
/// Throws std::invalid_argument unless w is in normal form.
struct LongSequences {
    MarkedSequence zeros;
    MarkedSequence ones;
};
LongSequences long_sequences(const BinaryWord& w);

/// The same sequences for any word with at least one 0 and one 1, derived
/// from the separator recurrences.
LongSequences long_sequences_by_rule(const BinaryWord& w);

/// ψ^i(w) reassembled from the i-th windows of the long sequences.
BinaryWord word_from_windows(const LongSequences& seq, int m, int n, int i);

}  // namespace rowmotion
