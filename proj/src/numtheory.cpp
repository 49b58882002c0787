#include "regrep/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "regrep/errors.hpp"

namespace regrep::nt {

namespace {

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) throw UsageError(std::string(what) + ": argument must be >= 1, got " + std::to_string(n));
}

// Distinct prime factors by trial division.
std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_positive(n, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

BigInt euler_phi(std::int64_t n) {
    require_positive(n, "euler_phi");
    std::int64_t r = n;
    for (auto p : prime_factors(n)) r = r / p * (p - 1);
    return BigInt(static_cast<long>(r));
}

int moebius(std::int64_t n) {
    require_positive(n, "moebius");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

BigInt ramanujan_sum_divisor_form(std::int64_t n, std::int64_t i) {
    require_positive(n, "ramanujan_sum");
    const std::int64_t g = gcd(n, mod(i, n));  // gcd(n, 0) = n
    BigInt s = 0;
    for (auto d : divisors(g)) s += moebius(n / d) * d;
    return s;
}

BigInt ramanujan_sum_quotient_form(std::int64_t n, std::int64_t i) {
    require_positive(n, "ramanujan_sum");
    const std::int64_t q = n / gcd(n, mod(i, n));
    BigInt num = euler_phi(n) * moebius(q);
    BigInt den = euler_phi(q);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InternalError("ramanujan quotient form is not integral");
    BigInt r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

BigInt ramanujan_sum(std::int64_t n, std::int64_t i) {
    BigInt a = ramanujan_sum_divisor_form(n, i);
    BigInt b = ramanujan_sum_quotient_form(n, i);
    if (a != b)
        throw InternalError("ramanujan sum forms disagree at n=" + std::to_string(n) +
                            " i=" + std::to_string(i));
    return a;
}

BigInt factorial(std::int64_t n) {
    if (n < 0) throw UsageError("factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(std::span<const std::int64_t> parts) {
    if (parts.empty()) throw UsageError("multinomial: parts must be non-empty");
    BigInt r = 1;
    std::int64_t total = 0;
    for (auto p : parts) {
        if (p < 0) throw UsageError("multinomial: negative part");
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

std::int64_t catalan(std::int64_t n) {
    BigInt c = binomial(2 * n, n) / (n + 1);
    return c.get_si();
}

}  // namespace regrep::nt
