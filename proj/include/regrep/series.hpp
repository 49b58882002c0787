#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "regrep/bigint.hpp"

namespace regrep {

/// Dense integer-coefficient univariate polynomial, index = degree.
using IntPoly1 = std::vector<BigInt>;

/// Formal power series c_0 + c_1 t + ... + c_N t^N with exact rational
/// coefficients. N (the order) is inclusive; arithmetic never produces terms
/// above it, and binary operations require equal orders.
class TruncatedSeries {
   public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, const std::vector<Rational>& coeffs);
    TruncatedSeries(int order, const IntPoly1& coeffs);

    static TruncatedSeries constant(int order, const Rational& c);
    static TruncatedSeries monomial(int order, int degree, const Rational& c = 1);

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    Rational& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& s);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;

    bool operator==(const TruncatedSeries& o) const;

    /// Series of a(t^k): the substitution t -> t^k.
    TruncatedSeries substitute_power(int k) const;
    /// Same coefficients, truncated or zero-extended to a new order.
    TruncatedSeries with_order(int order) const;
    /// Value at t = 1 (sum of all retained coefficients).
    Rational sum() const;

    bool all_integer() const;

    /// "1 + t + 2*t^2 - 1/2*t^3"; zero terms omitted, "0" for the zero series.
    std::string to_string(const std::string& var = "t") const;
    /// Array of decimal/rational strings, one per degree 0..N.
    nlohmann::json to_json() const;

   private:
    std::vector<Rational> c_;
};

/// Two-variable series sum c_{p,m} s^p t^m truncated per variable at
/// p <= order_s, m <= order_t.
class BivariateSeries {
   public:
    BivariateSeries(int order_s, int order_t);

    static BivariateSeries constant(int order_s, int order_t, const Rational& c);

    int order_s() const noexcept { return ns_; }
    int order_t() const noexcept { return nt_; }
    const Rational& operator()(int p, int m) const { return c_.at(index(p, m)); }
    Rational& operator()(int p, int m) { return c_.at(index(p, m)); }

    BivariateSeries& operator+=(const BivariateSeries& o);
    BivariateSeries& operator-=(const BivariateSeries& o);
    BivariateSeries& operator*=(const Rational& s);
    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
    friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
    friend BivariateSeries operator*(BivariateSeries a, const Rational& s) { return a *= s; }
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

    bool operator==(const BivariateSeries& o) const;

    /// Coefficients of s^p for p = 0..order_s at fixed t-degree m.
    TruncatedSeries row_t(int m) const;
    /// Coefficients of t^m for m = 0..order_t at fixed s-degree p.
    TruncatedSeries column_s(int p) const;

    nlohmann::json to_json() const;

   private:
    std::size_t index(int p, int m) const;

    int ns_, nt_;
    std::vector<Rational> c_;
};

/// numer / denom expanded to order N; denom(0) must be nonzero.
TruncatedSeries expand_rational(const IntPoly1& numer, const IntPoly1& denom, int order);

/// Multiplicative inverse; constant term must be nonzero.
TruncatedSeries inverse(const TruncatedSeries& f);

/// log(1 + u) for u with zero constant term.
TruncatedSeries log1p(const TruncatedSeries& u);
/// exp(v) for v with zero constant term.
TruncatedSeries exp(const TruncatedSeries& v);

/// log(1 + u) for a bivariate u with zero constant term.
BivariateSeries log1p(const BivariateSeries& u);

}  // namespace regrep
