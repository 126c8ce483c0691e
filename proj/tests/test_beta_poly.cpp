#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ckgrass/beta_poly.hpp"

#include <random>

using namespace ckgrass;

namespace {

BetaPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), exp(0, 4), num(-9, 9), den_pow(0, 2);
    BetaPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Rational c(num(rng), 1 << den_pow(rng));
        p += BetaPoly::beta_power(exp(rng), c);
    }
    return p;
}

}  // namespace

TEST_CASE("scalar_arith examples") {
    BetaPoly one_plus = BetaPoly::one() + BetaPoly::beta_power(1);
    BetaPoly one_minus = BetaPoly::one() - BetaPoly::beta_power(1);
    // (1+b)(1-b) = 1-b^2
    BetaPoly prod = scalar_arith(one_plus, one_minus, ArithKind::mul);
    CHECK(prod == BetaPoly::one() - BetaPoly::beta_power(2));

    // b^2 + 0 = b^2
    CHECK(scalar_arith(BetaPoly::beta_power(2), BetaPoly::zero(), ArithKind::add) ==
          BetaPoly::beta_power(2));

    // (-b/2)(-b/2) = b^2/4
    BetaPoly half = BetaPoly::beta_power(1, Rational(-1, 2));
    CHECK(scalar_arith(half, half, ArithKind::mul) == BetaPoly::beta_power(2, Rational(1, 4)));
}

TEST_CASE("canonical form drops zeros") {
    BetaPoly p = BetaPoly::beta_power(3, Rational(2));
    p += BetaPoly::beta_power(3, Rational(-2));
    CHECK(p.is_zero());
    CHECK(p == BetaPoly::zero());
    CHECK(p.terms().empty());
}

TEST_CASE("grading bookkeeping: exponents") {
    BetaPoly p = BetaPoly::beta_power(2, Rational(5, 4));
    CHECK(p.coeff(2) == Rational(5, 4));
    CHECK(p.coeff(1) == 0);
    CHECK(p.max_exponent() == 2);
    CHECK_THROWS(BetaPoly::beta_power(-1));
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937 rng(42);
    for (int i = 0; i < 200; ++i) {
        BetaPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("evaluate and truncate") {
    BetaPoly p = BetaPoly::constant(Rational(3)) + BetaPoly::beta_power(1, Rational(-2)) +
                 BetaPoly::beta_power(4, Rational(1, 2));
    CHECK(p.evaluate(Rational(0)) == Rational(3));
    CHECK(p.evaluate(Rational(-1)) == Rational(3) + Rational(2) + Rational(1, 2));
    CHECK(p.truncated(1) == BetaPoly::constant(Rational(3)) + BetaPoly::beta_power(1, Rational(-2)));
}

TEST_CASE("power of two denominators") {
    CHECK(BetaPoly::beta_power(2, Rational(3, 8)).has_power_of_two_denominators());
    CHECK_FALSE(BetaPoly::beta_power(2, Rational(1, 3)).has_power_of_two_denominators());
    CHECK(BetaPoly::beta_power(1, Rational(7)).is_integral());
    CHECK_FALSE(BetaPoly::beta_power(1, Rational(1, 2)).is_integral());
}
