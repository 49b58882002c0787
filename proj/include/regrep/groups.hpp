#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "regrep/bigint.hpp"

namespace regrep {

/// Residue tuple (a_1,...,a_r) with 0 <= a_j < n_j.
struct GroupElement {
    std::vector<std::int64_t> residues;
    auto operator<=>(const GroupElement&) const = default;
};

/// A character of G, indexed by the same residue tuples as the elements. The
/// character k sends a to zeta_e^t with t = sum_j k_j * a_j * (e / n_j) mod e.
struct Character {
    std::vector<std::int64_t> residues;
    auto operator<=>(const Character&) const = default;
};

/// Number of elements of each order d. Arbitrary profiles are accepted so
/// that non-abelian groups can be described for the invariant-only formulas.
using OrderProfile = std::map<std::int64_t, std::int64_t>;

/// Direct sum C_{n_1} + ... + C_{n_r} with the factor list kept exactly as
/// given. Elements are enumerated lexicographically by residue tuple (last
/// component fastest); index 0 is the neutral element.
class FiniteAbelianGroup {
   public:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

    const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
    std::int64_t order() const noexcept { return order_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    bool is_single_cyclic() const noexcept { return factors_.size() == 1; }

    /// Canonical spec string, e.g. "C2xC4".
    std::string name() const;

    std::vector<GroupElement> elements() const;
    GroupElement element(std::size_t index) const;
    std::size_t index_of(const GroupElement& a) const;

    GroupElement zero() const { return element(0); }
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    std::int64_t element_order(const GroupElement& a) const;

    // Index-level arithmetic backed by precomputed tables.
    std::size_t add_index(std::size_t i, std::size_t j) const { return add_table_[i * size() + j]; }
    std::size_t neg_index(std::size_t i) const { return neg_table_[i]; }
    std::int64_t order_of_index(std::size_t i) const { return order_table_[i]; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(order_); }

    /// Character indexed by the residues of element `index`.
    Character character(std::size_t index) const;

    /// Exponent t in 0..e-1 with chi(a) = zeta_e^t.
    std::int64_t char_eval_exponent(const Character& chi, const GroupElement& a) const;
    std::int64_t char_eval_exponent(std::size_t chi_index, std::size_t a_index) const;

   private:
    void check_member(const GroupElement& a) const;

    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
    std::int64_t exponent_ = 1;
    std::vector<std::size_t> add_table_;
    std::vector<std::size_t> neg_table_;
    std::vector<std::int64_t> order_table_;
};

/// Parses `C<int> ( x C<int> )*`, case-insensitive, whitespace ignored.
FiniteAbelianGroup parse_group(std::string_view spec);

OrderProfile order_profile(const FiniteAbelianGroup& g);

/// Accepts {"1":1,"2":3,"3":2}; keys are orders, values are counts.
OrderProfile parse_order_profile(const nlohmann::json& j);

std::int64_t profile_group_order(const OrderProfile& profile);

/// Sign of the permutation i -> index(-x_i).
int inversion_permutation_sign(const FiniteAbelianGroup& g);

/// Number of subsets S of G (empty set included) whose elements sum to 0.
/// Brute force over 2^|G| subsets; |G| <= 24.
BigInt subset_sum_zero_count(const FiniteAbelianGroup& g);

/// One representative per isomorphism class, in invariant-factor form
/// C_{d_1} x ... x C_{d_k} with d_1 | d_2 | ... ; order 1 gives C1.
std::vector<FiniteAbelianGroup> abelian_groups_of_order(std::int64_t n);
std::vector<FiniteAbelianGroup> abelian_groups_up_to(std::int64_t max_order);

}  // namespace regrep
