#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rowmotion/poset.hpp"

namespace rowmotion {

/// An order isomorphism a -> b as a vector (image[x] in b for x in a), or
/// nullopt. Colour refinement on (rank, cover degrees, neighbour colours)
/// prunes a backtracking search that checks the cover relation.
std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& a, const Poset& b);

inline bool are_isomorphic(const Poset& a, const Poset& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace rowmotion
