#include <doctest.h>

#include "regrep/errors.hpp"
#include "regrep/groups.hpp"
#include "regrep/polynomial.hpp"

using namespace regrep;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPoly1{-1, 1});
    CHECK(cyclotomic_polynomial(4) == IntPoly1{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == IntPoly1{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == IntPoly1{1, 0, -1, 0, 1});
    // coefficient -2 first appears at 105
    const auto p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(std::count(p105.begin(), p105.end(), BigInt(-2)) == 2);
}

TEST_CASE("roots of unity in the cyclotomic ring") {
    for (std::int64_t e : {1, 2, 3, 4, 5, 6, 8, 12}) {
        CyclotomicInt sum(e);
        for (std::int64_t t = 0; t < e; ++t) sum += CyclotomicInt::root_power(e, t);
        // sum of all e-th roots of unity
        CHECK(sum.is_rational_integer());
        CHECK(sum.integer_value() == (e == 1 ? 1 : 0));
        CHECK(CyclotomicInt::root_power(e, 1) * CyclotomicInt::root_power(e, e - 1) == CyclotomicInt(e, BigInt(1)));
    }
    const auto z = CyclotomicInt::root_power(4, 1);
    CHECK(z * z == CyclotomicInt(4, BigInt(-1)));
    CHECK_THROWS_AS(z.integer_value(), InternalError);
}

TEST_CASE("sparse polynomial arithmetic") {
    const auto x = IntPolynomial::variable(2, 0, BigInt(1));
    const auto y = IntPolynomial::variable(2, 1, BigInt(1));
    const auto s = (x + y) * (x + y);
    CHECK(to_string(s) == "x0^2 + 2*x0*x1 + x1^2");
    CHECK((s - s).is_zero());
    CHECK(to_string((x - y) * (x + y)) == "x0^2 - x1^2");
    CHECK(to_string(-x) == "-x0");
    CHECK(to_string(IntPolynomial(2)) == "0");
    CHECK(coefficient_sum(s) == 4);
}

TEST_CASE("parse and json round trips") {
    const std::string text = "2*x0^4 + 10*x0^2*x1*x2 + 4*x0*x1^3 + 4*x0*x2^3 + 4*x1^2*x2^2";
    const auto p = parse_polynomial(text, 3);
    CHECK(to_string(p) == text);
    CHECK(int_polynomial_from_json(to_json(p), 3) == p);
    CHECK(to_json(parse_polynomial("3*x0*x1*x2 - x1", 3)).dump() ==
          R"([{"coeff":"3","exponents":[1,1,1]},{"coeff":"-1","exponents":[0,1,0]}])");
    CHECK(parse_polynomial("x1^3 + x0^3 + x2^3 + 3*x0*x1*x2", 3) ==
          parse_polynomial("x0^3 + 3*x0*x1*x2 + x1^3 + x2^3", 3));
    CHECK_THROWS_AS(parse_polynomial("x3", 3), UsageError);
    CHECK_THROWS_AS(parse_polynomial("2**x0", 3), UsageError);
}

TEST_CASE("group action permutes variables") {
    const auto g = parse_group("C3");
    const auto p = parse_polynomial("x0^2*x1 + 5*x2", 3);
    CHECK(apply_group_action(g, g.element(1), p) == parse_polynomial("x1^2*x2 + 5*x0", 3));
    CHECK(apply_group_action(g, g.element(0), p) == p);
}

TEST_CASE("integer projection of cyclotomic polynomials") {
    CycPolynomial p(1);
    Monomial m{2};
    p.add_term(m, CyclotomicInt::root_power(3, 1) + CyclotomicInt::root_power(3, 2));
    const auto q = to_integer_polynomial(p);
    CHECK(to_string(q) == "-x0^2");
    CycPolynomial bad(1);
    bad.add_term(m, CyclotomicInt::root_power(3, 1));
    CHECK_THROWS_AS(to_integer_polynomial(bad), InternalError);
}
