#include <doctest.h>

#include "regrep/numtheory.hpp"
#include "regrep/series.hpp"

using namespace regrep;

namespace {

TruncatedSeries geometric(int order) {
    TruncatedSeries s(order);
    for (int k = 0; k <= order; ++k) s[k] = 1;
    return s;
}

}  // namespace

TEST_CASE("cauchy product truncates at the order") {
    const auto g = geometric(6);
    const auto sq = g * g;
    for (int k = 0; k <= 6; ++k) CHECK(sq[k] == k + 1);
    CHECK(sq.order() == 6);
}

TEST_CASE("inverse and rational expansion") {
    TruncatedSeries one_minus_t(8, IntPoly1{1, -1});
    CHECK(inverse(one_minus_t) == geometric(8));
    // 1 / (1 - t - t^2) gives the Fibonacci numbers
    const auto fib = expand_rational({1}, {1, -1, -1}, 10);
    const std::vector<int> expected{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (int k = 0; k <= 10; ++k) CHECK(fib[k] == expected[static_cast<std::size_t>(k)]);
    CHECK_THROWS(inverse(TruncatedSeries(3, IntPoly1{0, 1})));
}

TEST_CASE("log1p and exp are inverse") {
    // log(1 + t) = t - t^2/2 + t^3/3 - ...
    const auto l = log1p(TruncatedSeries::monomial(7, 1));
    for (int k = 1; k <= 7; ++k) CHECK(l[k] == Rational((k % 2) ? 1 : -1, k));
    TruncatedSeries u(12, std::vector<Rational>{0, 3, Rational(-1, 2), 7, 0, 1});
    const auto back = exp(log1p(u)) - TruncatedSeries::constant(12, 1);
    CHECK(back == u);
    // exp(t) has coefficients 1/k!
    const auto e = exp(TruncatedSeries::monomial(10, 1));
    for (int k = 0; k <= 10; ++k) CHECK(e[k] == Rational(1) / Rational(nt::factorial(k)));
}

TEST_CASE("substitute_power and with_order") {
    const auto g = geometric(9).substitute_power(3);
    for (int k = 0; k <= 9; ++k) CHECK(g[k] == (k % 3 == 0 ? 1 : 0));
    CHECK(geometric(9).with_order(4) == geometric(4));
    CHECK(geometric(2).with_order(4)[4] == 0);
}

TEST_CASE("printing and json") {
    TruncatedSeries s(4, std::vector<Rational>{1, 1, 2, 0, Rational(-1, 3)});
    CHECK(s.to_string() == "1 + t + 2*t^2 - 1/3*t^4");
    CHECK(s.to_json().dump() == R"(["1","1","2","0","-1/3"])");
    CHECK(TruncatedSeries(3).to_string() == "0");
    CHECK(s.all_integer() == false);
}

TEST_CASE("bivariate log1p matches the univariate one on a line") {
    // u(s, t) = s + t: log(1 + s + t) restricted to coefficients of s^p t^m
    BivariateSeries u(6, 6);
    u(1, 0) = 1;
    u(0, 1) = 1;
    const auto l = log1p(u);
    for (int p = 0; p <= 6; ++p)
        for (int m = 0; m <= 6; ++m) {
            if (p + m == 0 || p + m > 6) continue;
            const int k = p + m;
            const Rational expect = Rational(nt::binomial(k, p)) * Rational((k % 2) ? 1 : -1, k);
            CHECK(l(p, m) == expect);
        }
    CHECK(l.row_t(0) == log1p(TruncatedSeries::monomial(6, 1)));
}
