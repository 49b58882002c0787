#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace regrep {

// Exact integer and rational arithmetic; every integer-valued quantity in the
// library is carried in one of these.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// num/den in lowest terms; den must be nonzero.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

inline BigInt pow_int(std::int64_t base, std::uint64_t exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                  static_cast<unsigned long>(exp));
    if (base < 0 && (exp & 1u)) r = -r;
    return r;
}

}  // namespace regrep
