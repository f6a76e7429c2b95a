#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rowmotion {

enum class Family { A, B, C, D, E, F, G };

/// Cartan type of a simple Lie algebra, e.g. {E, 7}.
struct RootType {
    Family family = Family::A;
    int rank = 1;

    friend bool operator==(const RootType&, const RootType&) = default;
};

/// Throws std::invalid_argument for nonexistent types (E5, F3, D2, ...).
void validate(const RootType& t);
std::string to_string(const RootType& t);

/// Poset expression AST.
struct PosetExpr {
    enum class Kind { Chain, K, H, J, Prod, OSum, DUnion, Layer };

    Kind kind = Kind::Chain;
    int param = 1;          // chain length, K/H parameter, or layer pivot
    RootType type;          // layer only
    std::vector<PosetExpr> children;

    static PosetExpr chain(int k) { return {Kind::Chain, k, {}, {}}; }
    static PosetExpr k(int r) { return {Kind::K, r, {}, {}}; }
    static PosetExpr h(int n) { return {Kind::H, n, {}, {}}; }
    static PosetExpr j(PosetExpr e) { return {Kind::J, 0, {}, {std::move(e)}}; }
    static PosetExpr prod(PosetExpr a, PosetExpr b) { return {Kind::Prod, 0, {}, {std::move(a), std::move(b)}}; }
    static PosetExpr osum(PosetExpr a, PosetExpr b) { return {Kind::OSum, 0, {}, {std::move(a), std::move(b)}}; }
    static PosetExpr dunion(PosetExpr a, PosetExpr b) { return {Kind::DUnion, 0, {}, {std::move(a), std::move(b)}}; }
    static PosetExpr layer(RootType t, int i) { return {Kind::Layer, i, t, {}}; }

    friend bool operator==(const PosetExpr&, const PosetExpr&) = default;
};

/// Canonical text, parseable by parse_poset_expr.
std::string to_string(const PosetExpr& e);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t offset);
    /// Byte offset of the first offending character.
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Grammar (whitespace-insensitive, constructor names case-insensitive):
///   expr := chain(INT) | K(INT) | H(INT) | J(expr)
///         | prod(expr,expr) | osum(expr,expr) | dunion(expr,expr)
///         | layer(TYPE,INT)
///   TYPE := (A|B|C|D)INT | E6 | E7 | E8 | F4 | G2
PosetExpr parse_poset_expr(std::string_view text);

}  // namespace rowmotion
