#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "rowmotion/poset.hpp"

namespace rowmotion {

/// [m] × P with access to the component decomposition of its ideals.
///
/// An ideal of [m] × P is a chain I_1 ⊇ I_2 ⊇ ... ⊇ I_m of ideals of P,
/// where I_i collects the elements with first coordinate i. The poset is
/// held behind a shared pointer so IdealSets built on it stay valid when
/// the ChainProduct is copied or moved.
class ChainProduct {
public:
    ChainProduct(int m, Poset factor);

    int m() const { return m_; }
    const Poset& poset() const { return *poset_; }
    const Poset& factor() const { return *factor_; }

    /// Index of (i, x) for 1 <= i <= m and x a factor index.
    std::size_t element(int i, std::size_t x) const { return index_[(i - 1) * factor_->size() + x]; }

    /// Components I_1, ..., I_m of an ideal (front is I_1, the largest).
    std::vector<ElementSet> components(const ElementSet& ideal) const;
    ElementSet assemble(const std::vector<ElementSet>& components) const;

    /// True when the ideal lives on this product's poset (same object or
    /// an identical copy).
    bool owns(const IdealSet& ideal) const;

private:
    int m_;
    std::shared_ptr<const Poset> factor_;
    std::shared_ptr<const Poset> poset_;
    std::vector<std::size_t> index_;
};

/// Full-rank dynamics on [m] × P: component i is the rank ideal L_{ranks[i]}
/// (ranks non-increasing, each in 0..d). Returns the rank tuple of Ψ(I)
/// read off the grouped closed form
///   (L_d^{n_0}, L_{i_1}^{n_1}, ..., L_{i_s}^{n_s})
///     -> (L_{i_1+1}^{n_0+1}, L_{i_2+1}^{n_1}, ..., L_{i_s+1}^{n_{s-1}}, L_0^{n_s-1}).
std::vector<int> full_rank_step(const std::vector<int>& ranks, int d);

/// Component of an ideal of [m] × K_{n-1}: a rank ideal L_j (0 <= j <= 2n-1)
/// or one of the two non-rank ideals I_n = {1..n-1, n}, I_n' = {1..n-1, n'}.
struct KComponent {
    enum class Kind { Rank, Star, StarPrime };
    Kind kind = Kind::Rank;
    int rank = 0;  // Rank only

    static KComponent l(int j) { return {Kind::Rank, j}; }
    static KComponent star() { return {Kind::Star, 0}; }
    static KComponent star_prime() { return {Kind::StarPrime, 0}; }

    friend bool operator==(const KComponent&, const KComponent&) = default;
};

/// Non-full-rank dynamics on [m] × K_{n-1} from the grouped closed form
///   (L_{2n-1}^{n_0}, L_{i_1}^{n_1}, ..., L_{i_s}^{n_s}, I_n^{m_0}, L_{j_1}^{m_1}, ..., L_{j_t}^{m_t})
/// with the two branches j_1 < n-1 (the I_n block turns into I_n') and
/// j_1 = n-1 (it turns into L_n and the following block into I_n). Accepts
/// tuples whose non-rank components are all I_n; throws std::invalid_argument
/// otherwise.
std::vector<KComponent> nonfull_rank_step(const std::vector<KComponent>& tuple, int n);

}  // namespace rowmotion
