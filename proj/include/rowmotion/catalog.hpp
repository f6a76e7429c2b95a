#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rowmotion/expr.hpp"
#include "rowmotion/poset.hpp"

namespace rowmotion {

/// One of the twenty exceptional Δ(1) posets. Every entry has a realizing
/// layer (Knapp pivot); the thirteen that are built from chains, H_n and J
/// also carry that combinator expression.
struct CatalogEntry {
    std::string name;  // e.g. "[3]×J^2([2]×[3])", "[α_8] in E_8"
    std::optional<PosetExpr> expr;
    RootType type;
    int pivot = 1;

    PosetExpr layer_expr() const { return PosetExpr::layer(type, pivot); }
};

/// The twenty entries, in the order they are usually listed.
const std::vector<CatalogEntry>& catalog();

/// Lookup tolerant of spelling: ignores spaces and underscores, accepts 'x'
/// for '×', "a" for "α", and ² / ³ for ^2 / ^3.
const CatalogEntry* find_catalog_entry(std::string_view name);

/// A two-parameter infinite family of Δ(1) posets.
struct FamilyDescriptor {
    std::string name;        // "[m]×[n]", "H_n", "[m]×K_{n-1}"
    std::string parameters;  // human-readable domain
    PosetExpr (*member)(int a, int b);
    std::string (*member_name)(int a, int b);
};

/// [m]×[n] (m, n >= 1), H_n (n >= 1, second argument ignored), [m]×K_{n-1}
/// (m >= 1, n >= 2).
const std::vector<FamilyDescriptor>& families();

/// A layer of a classical root system together with the family members it
/// is isomorphic to (found by isomorphism test, never assumed).
struct ClassicalLayer {
    RootType type;
    int pivot = 1;
    std::size_t elements = 0;
    int max_rank = 0;
    std::vector<std::string> members;  // e.g. {"[2]×[2]", "[1]×K_1"}
};

/// Every layer of A_l, B_l (l >= 2), C_l (l >= 3) and D_l (l >= 4) with at
/// most max_elements elements, ordered by type, rank and pivot.
std::vector<ClassicalLayer> classical_layers(std::size_t max_elements);

/// Family members of the same size that are isomorphic to p.
std::vector<std::string> identify_family_members(const Poset& p);

}  // namespace rowmotion
