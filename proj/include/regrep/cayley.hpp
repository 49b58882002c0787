#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regrep/groups.hpp"
#include "regrep/kernels.hpp"
#include "regrep/polynomial.hpp"
#include "regrep/report.hpp"

namespace regrep::cayley {

/// plain: x_i + x_j; hat: x_i - x_j; extended: plain over x_0..x_{n-1}, x_0
/// (neutral element listed twice); block2n: [[M, M], [M, M]]; toeplitz:
/// x_{(j - i) mod n} for any size l >= n (cyclic groups only).
enum class TableVariant { plain, hat, extended, block2n, toeplitz };

TableVariant parse_variant(const std::string& name);
std::string variant_name(TableVariant v);

/// Square matrix of variable indices over x_0..x_{n-1}.
class CayleyMatrix {
   public:
    CayleyMatrix(std::size_t size, std::size_t nvars, std::vector<std::uint32_t> entries, TableVariant variant);

    std::size_t size() const noexcept { return size_; }
    std::size_t nvars() const noexcept { return nvars_; }
    TableVariant variant() const noexcept { return variant_; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return entries_.at(i * size_ + j); }
    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

    kernels::VariableGrid grid() const { return {size_, nvars_, entries_}; }

    /// {"variant": ..., "size": l, "nvars": n, "rows": [[...], ...]}
    nlohmann::json to_json() const;
    /// Rows of "x0 x1 x2" separated by newlines.
    std::string to_string() const;

   private:
    std::size_t size_;
    std::size_t nvars_;
    std::vector<std::uint32_t> entries_;
    TableVariant variant_;
};

/// Builds a table variant; `l` is only read for toeplitz (defaults to n).
CayleyMatrix build(const FiniteAbelianGroup& g, TableVariant variant, std::optional<std::size_t> l = std::nullopt);

/// Same as build, but row/column k of the base table corresponds to group
/// element order[k], and variable x_k names element order[k]. order must be a
/// permutation of 0..n-1. Toeplitz tables cannot be relabelled.
CayleyMatrix build_relabelled(const FiniteAbelianGroup& g, TableVariant variant, const std::vector<std::size_t>& order);

enum class PermanentAlgorithm { leibniz, ryser };
enum class DeterminantAlgorithm { leibniz, factored };

PermanentAlgorithm parse_permanent_algorithm(const std::string& name);
DeterminantAlgorithm parse_determinant_algorithm(const std::string& name);

IntPolynomial permanent(const CayleyMatrix& m, PermanentAlgorithm alg = PermanentAlgorithm::ryser);

/// Symbolic determinant. The factored route (plain or hat tables only)
/// multiplies the linear forms v_j = sum_i chi_j(x_i) x_i in Z[zeta_e] and
/// applies the sign of the inversion permutation. Extended and block tables
/// have repeated columns and return 0.
IntPolynomial determinant(const FiniteAbelianGroup& g, const CayleyMatrix& m,
                          DeterminantAlgorithm alg = DeterminantAlgorithm::leibniz);

/// The linear forms v_j, j = 0..n-1, as polynomials over Z[zeta_e].
std::vector<CycPolynomial> character_linear_forms(const FiniteAbelianGroup& g);

/// All exponent vectors of the given total degree with sum k_i x_i = 0 in G.
std::vector<Monomial> hall_support(const FiniteAbelianGroup& g, std::size_t degree);

/// Number of distinct monomials of per(M_G), via hall_support; for n <= 7 the
/// literal permanent is expanded as well and the two must agree.
BigInt p_count(const FiniteAbelianGroup& g);
/// Number of monomials surviving cancellation in det(M_G).
BigInt d_count(const FiniteAbelianGroup& g);

/// Sum of all characters of the dual group, as a character.
Character dual_sum_character(const FiniteAbelianGroup& g);

/// Support of per over the hall_support sets: per(M_G) at degree n and, for
/// the extended table, degree n + 1.
Report check_hall(const FiniteAbelianGroup& g, bool include_extended);

/// gamma . per = per and gamma . det = psi(gamma) det for every gamma, where
/// psi is the sum of all characters. Also det(hat) = +-det(plain),
/// per(hat) = per(plain) and the factored determinant equals Leibniz when
/// the size allows.
Report check_invariance(const FiniteAbelianGroup& g);

/// Exhaustive over S_n when sample == 0, otherwise `sample` random
/// permutations drawn with a fixed seed.
Report check_action_identities(const FiniteAbelianGroup& g, std::size_t sample = 0, std::uint64_t seed = 0x5eed);

/// For p in {3, 5, 7}, modulo p: det of the Toeplitz-form table is sum x_i^p,
/// det(M_{C_p}) is (-1)^((p-1)/2) sum x_i^p, and per(M_{C_p}) is sum x_i^p.
Report lehmer_check(std::int64_t p);

/// Monomial counts of per(extended) and per(block2n) against the invariant
/// Poincare series at degrees n + 1 and 2n.
Report check_block_and_extended_counts(const FiniteAbelianGroup& g);

/// Support of per of the l x l Toeplitz table of C_n against the weight
/// condition, and its size against a_coeff(n, l, 0).
Report check_conjecture(std::int64_t n, std::int64_t l);

}  // namespace regrep::cayley
