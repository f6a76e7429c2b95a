#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rowmotion/element_set.hpp"

namespace rowmotion {

class PosetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Cover = std::pair<std::size_t, std::size_t>;  // (lower, upper)

/// Finite graded poset given by its cover relation.
///
/// Elements are re-indexed once at construction along a linear extension
/// (sorted by rank, ties broken by input order), so a lower element never
/// carries a larger index than an element above it. The full order relation
/// is precomputed as principal up/down sets.
///
/// Graded means: there is a rank function with every minimal element at
/// rank 1 and rank(y) = rank(x) + 1 whenever y covers x, and every maximal
/// element sits at the top rank. Anything else is rejected.
class Poset {
public:
    Poset() = default;

    /// Builds a poset from covers over input indices 0..n-1. Labels default
    /// to the 1-based input index.
    static Poset from_covers(std::size_t n, const std::vector<Cover>& covers,
                             std::vector<std::string> labels = {});

    std::size_t size() const { return rank_.size(); }
    bool empty() const { return rank_.empty(); }

    /// Rank of element x (minimal elements have rank 1).
    int rank(std::size_t x) const { return rank_[x]; }
    /// Maximum rank d; 0 for the empty poset.
    int max_rank() const { return max_rank_; }

    const std::string& label(std::size_t x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> find_label(const std::string& label) const;

    /// Position in the linear extension of the element given as input index k.
    std::size_t position_of_input(std::size_t k) const { return position_of_input_[k]; }

    bool leq(std::size_t x, std::size_t y) const { return down_[y].contains(x); }
    bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

    /// Principal ideal {y : y <= x}.
    const ElementSet& down(std::size_t x) const { return down_[x]; }
    /// Principal filter {y : y >= x}.
    const ElementSet& up(std::size_t x) const { return up_[x]; }
    const ElementSet& lower_covers(std::size_t x) const { return lower_covers_[x]; }
    const ElementSet& upper_covers(std::size_t x) const { return upper_covers_[x]; }

    /// Covers in the re-indexed numbering, sorted.
    const std::vector<Cover>& covers() const { return covers_; }

    ElementSet all() const { return ElementSet::prefix(size()); }
    ElementSet minimal_elements() const;
    ElementSet maximal_elements() const;

    /// Rank level P_j (1 <= j <= d).
    ElementSet rank_level(int j) const;
    /// Rank ideal L_i = P_1 ∪ ... ∪ P_i, with L_0 empty.
    ElementSet rank_ideal(int i) const;

    bool is_ideal(const ElementSet& s) const;
    bool is_antichain(const ElementSet& s) const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.rank_ == b.rank_ && a.covers_ == b.covers_ && a.labels_ == b.labels_;
    }

private:
    std::vector<int> rank_;
    int max_rank_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::size_t> position_of_input_;
    std::vector<Cover> covers_;
    std::vector<ElementSet> down_, up_, lower_covers_, upper_covers_;
};

/// Downward-closed subset of a poset.
class IdealSet {
public:
    /// Validates downward closure.
    IdealSet(const Poset& poset, ElementSet members);

    static IdealSet unchecked(const Poset& poset, ElementSet members) {
        return IdealSet(poset, members, Unchecked{});
    }
    static IdealSet empty(const Poset& poset) { return unchecked(poset, {}); }
    static IdealSet full(const Poset& poset) { return unchecked(poset, poset.all()); }

    const Poset& poset() const { return *poset_; }
    const ElementSet& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(std::size_t x) const { return members_.contains(x); }

    friend bool operator==(const IdealSet& a, const IdealSet& b) {
        return a.poset_ == b.poset_ && a.members_ == b.members_;
    }

private:
    struct Unchecked {};
    IdealSet(const Poset& poset, ElementSet members, Unchecked)
        : poset_(&poset), members_(members) {}

    const Poset* poset_;
    ElementSet members_;
};

/// Subset of pairwise incomparable elements.
class AntichainSet {
public:
    /// Validates pairwise incomparability.
    AntichainSet(const Poset& poset, ElementSet members);

    static AntichainSet unchecked(const Poset& poset, ElementSet members) {
        return AntichainSet(poset, members, Unchecked{});
    }

    const Poset& poset() const { return *poset_; }
    const ElementSet& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(std::size_t x) const { return members_.contains(x); }

    friend bool operator==(const AntichainSet& a, const AntichainSet& b) {
        return a.poset_ == b.poset_ && a.members_ == b.members_;
    }

private:
    struct Unchecked {};
    AntichainSet(const Poset& poset, ElementSet members, Unchecked)
        : poset_(&poset), members_(members) {}

    const Poset* poset_;
    ElementSet members_;
};

/// Comma-separated labels of the members, in index order.
std::string describe(const Poset& poset, const ElementSet& s);

}  // namespace rowmotion
