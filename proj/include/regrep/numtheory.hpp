#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "regrep/bigint.hpp"

namespace regrep::nt {

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Least non-negative residue of a modulo n (n >= 1).
std::int64_t mod(std::int64_t a, std::int64_t n);

/// Ascending list of the positive divisors of n. Throws UsageError for n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

BigInt euler_phi(std::int64_t n);

/// Moebius function; 0 unless n is squarefree.
int moebius(std::int64_t n);

/// Ramanujan sum c_n(i): the sum of the i-th powers of the primitive n-th roots
/// of unity. Evaluated by the Moebius-divisor sum and by the phi/mu quotient,
/// and the two are required to agree (InternalError otherwise).
BigInt ramanujan_sum(std::int64_t n, std::int64_t i);

// The two closed forms, exposed separately for testing.
BigInt ramanujan_sum_divisor_form(std::int64_t n, std::int64_t i);
BigInt ramanujan_sum_quotient_form(std::int64_t n, std::int64_t i);

BigInt factorial(std::int64_t n);
BigInt binomial(std::int64_t n, std::int64_t k);

/// (sum parts)! / prod(parts!). parts must be non-empty and non-negative.
BigInt multinomial(std::span<const std::int64_t> parts);

inline BigInt multinomial(std::initializer_list<std::int64_t> parts) {
    return multinomial(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

std::int64_t catalan(std::int64_t n);

}  // namespace regrep::nt
