#pragma once

#include "rowmotion/expr.hpp"
#include "rowmotion/poset.hpp"

namespace rowmotion {

/// [k] = {1 < 2 < ... < k}.
Poset chain(int k);

/// Componentwise order; element (x, y) has label "(lx,ly)" and input index
/// x * b.size() + y, so position_of_input recovers it.
Poset product(const Poset& a, const Poset& b);

/// a ⊕ b: every element of a lies below every element of b.
Poset ordinal_sum(const Poset& a, const Poset& b);

/// a ⊔ b. Throws PosetError unless both parts have the same height, since
/// otherwise the result is not graded.
Poset disjoint_union(const Poset& a, const Poset& b);

/// J(P): ideals of P (empty and full included) ordered by inclusion; the
/// ideal I sits at rank |I| + 1.
Poset ideal_lattice(const Poset& p);

/// K_r = [r] ⊕ ([1] ⊔ [1]) ⊕ [r], labelled 1..r, r+1, (r+1)', r+2..2r+1.
Poset k_poset(int r);

/// H_n as the shifted staircase {(i, j) : 1 <= i <= j <= n}, componentwise.
Poset h_poset(int n);

/// Evaluates an expression. Deterministic: equal expressions give equal posets.
Poset build(const PosetExpr& e);

}  // namespace rowmotion
