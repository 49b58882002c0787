#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regrep/bigint.hpp"
#include "regrep/groups.hpp"
#include "regrep/report.hpp"
#include "regrep/series.hpp"

namespace regrep::molien {

// Enumeration guard for the brute-force oracles (number of compositions).
inline constexpr std::int64_t kEnumerationLimit = 10'000'000;

/// dim (S^m R)_{C_n, chi_i}: the number of (lambda_0..lambda_{n-1}) >= 0 with
/// sum m and sum j*lambda_j = i mod n, from the divisor-sum closed form.
/// Defined for all (n, m) != (0, 0) with n, m >= 0.
BigInt a_coeff(std::int64_t n, std::int64_t m, std::int64_t i);

/// Direct enumeration of the vectors counted by a_coeff (n >= 1).
BigInt a_bruteforce(std::int64_t n, std::int64_t m, std::int64_t i);

/// dim (S^p R (x) Lambda^m R)_{C_n, chi_i}; 0 when m > n.
BigInt dim_sym_wedge(std::int64_t n, std::int64_t p, std::int64_t m, std::int64_t i);

/// Counts pairs (lambda, J): lambda a composition of p into n parts, J an
/// m-subset of {0..n-1}, with sum j*lambda_j + sum J = i mod n.
BigInt dim_bruteforce(std::int64_t n, std::int64_t p, std::int64_t m, std::int64_t i);

/// dim (Lambda^m R)_{C_n, chi_i}; 0 when m > n.
BigInt b_coeff(std::int64_t n, std::int64_t m, std::int64_t i);

/// Sum over elements of order d of chi_i(gamma^{-1}), evaluated in Z[zeta_e]
/// and required to be a rational integer. chi_i is the character indexed by
/// element i of G.
std::map<std::int64_t, BigInt> character_sums_by_order(const FiniteAbelianGroup& g, std::size_t chi_index);

/// The same sums for C_n through Ramanujan sums: d -> c_d(i), d | n.
std::map<std::int64_t, BigInt> cyclic_character_sums(std::int64_t n, std::int64_t i);

/// Poincare series of (S^. R)_{G, chi_i} to order N.
TruncatedSeries sym_series(const FiniteAbelianGroup& g, std::int64_t i, int order);
/// Invariants only, from an order profile.
TruncatedSeries sym_series(const OrderProfile& profile, int order);

/// Poincare polynomial of (Lambda^. R)_{G, chi_i}; pass order = |G| for the
/// whole polynomial.
TruncatedSeries ext_series(const FiniteAbelianGroup& g, std::int64_t i, int order);
TruncatedSeries ext_series(const OrderProfile& profile, int order);

/// F((S^. R (x) Lambda^. R)_{C_n, chi_i}; s, t); s indexes the symmetric degree.
BivariateSeries bigraded_series(std::int64_t n, std::int64_t i, int order_s, int order_t);

/// dim (Lambda^. R)_{C_n, chi_i}, summed over all degrees.
BigInt ext_total_dim(std::int64_t n, std::int64_t i);
/// dim (Lambda^. R)^G from an order profile (sum over odd orders).
BigInt ext_total_dim_invariants(const OrderProfile& profile);
/// Number of J in {0..n-1} with sum J = i mod n, by enumeration (n <= 24).
BigInt subset_weight_count(std::int64_t n, std::int64_t i);

/// Closed form for the number of zero-sum subsets of G.
BigInt n_g(const FiniteAbelianGroup& g);

/// Checks dim_sym_wedge(q+m, p, m, i) == dim_sym_wedge(p+m, q, m, i) for
/// p+q+m <= max_total and 0 <= i <= max_total.
Report check_reciprocity(std::int64_t max_total);

/// The m = 0 slice: a_coeff(n, m, i) == a_coeff(m, n, i) for n, m >= 1,
/// n + m <= max_total, each side also checked against a_bruteforce.
Report check_fredman(std::int64_t max_total);

enum class Identity { log2var, log3var, A, B };

Identity parse_identity(const std::string& name);
std::string identity_name(Identity which);

/// Compares a generating function assembled from dimension formulas against
/// the log/exp side built with series arithmetic, coefficient by coefficient.
/// Default weights: 0..5 for A, B, log2var; 0..2 for log3var.
Report check_identity(Identity which, int order, std::vector<std::int64_t> weights = {});

}  // namespace regrep::molien
