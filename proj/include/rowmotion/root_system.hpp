#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rowmotion/expr.hpp"
#include "rowmotion/poset.hpp"

namespace rowmotion {

/// Root vector in simple-root coordinates.
using RootVector = std::vector<int>;

/// Positive roots of a crystallographic root system, generated from the
/// Cartan data by root-string closure. Simple roots use Bourbaki numbering
/// internally; see knapp_to_bourbaki for the public pivot convention.
struct RootSystem {
    RootType type;
    /// cartan[i][j] = 2(α_i, α_j) / (α_j, α_j).
    std::vector<std::vector<int>> cartan;
    /// Twice the inner products (α_i, α_j), normalised so short roots have (α,α) = 2.
    std::vector<std::vector<int>> gram;
    /// Ordered by height, then lexicographically.
    std::vector<RootVector> positive_roots;

    int rank() const { return type.rank; }
    /// ⟨v, α_j^∨⟩ = 2(v, α_j) / (α_j, α_j).
    int coroot_pairing(const RootVector& v, int j) const;
    /// s_j(v) = v − ⟨v, α_j^∨⟩ α_j.
    RootVector reflect(const RootVector& v, int j) const;
    bool is_positive_root(const RootVector& v) const;
    const RootVector& highest_root() const { return positive_roots.back(); }
};

/// Positive roots of the given type (throws std::invalid_argument on an
/// invalid type).
RootSystem positive_roots(const RootType& type);

/// Pivot numbering convention.
///
/// Layer pivots are given in Knapp's numbering. It agrees with Bourbaki's
/// for A_l, B_l, C_l, D_l, E_6, E_7, E_8 and G_2. For F_4 Knapp numbers the
/// diagram from the short end (α_1, α_2 short; α_3, α_4 long), the reverse
/// of Bourbaki, so Knapp's α_i is Bourbaki's α_{5−i}.
///
///   type  Knapp i -> Bourbaki index
///   F4    1->4, 2->3, 3->2, 4->1
///   other identity
int knapp_to_bourbaki(const RootType& type, int knapp_index);

/// The poset [α_i] of positive roots whose α_i-coefficient is exactly 1,
/// with the involution p -> w_0^i(p).
struct RootLayer {
    RootSystem base;
    int pivot = 1;           // Knapp numbering, 1-based
    int bourbaki_pivot = 1;  // 1-based
    Poset poset;
    /// Root vector of each poset element (poset indexing).
    std::vector<RootVector> roots;
    /// star[p] = w_0^i(p), as poset indices.
    std::vector<std::size_t> star;
    /// Reduced word (1-based Bourbaki indices) of w_0^i, applied right to left.
    std::vector<int> longest_word;

    std::string name() const;
};

/// Throws std::out_of_range when the pivot is not in 1..rank.
RootLayer layer(const RootType& type, int knapp_pivot);

std::size_t star_involution(const RootLayer& layer, std::size_t p);

/// Reduced word of the longest element of the parabolic subgroup generated
/// by the given simple reflections (1-based Bourbaki indices), found by
/// greedy ascent.
std::vector<int> longest_parabolic_word(const RootSystem& rs, const std::vector<int>& generators);

/// Applies a word of simple reflections to v, rightmost letter first.
RootVector apply_word(const RootSystem& rs, const std::vector<int>& word, RootVector v);

}  // namespace rowmotion
