#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ckgrass/laurent.hpp"

using namespace ckgrass;

namespace {

ExpVec ev(std::initializer_list<int> xs) { return ExpVec(xs.begin(), xs.end()); }

BetaPoly bp(int k, const Rational& c) { return BetaPoly::beta_power(k, c); }

// Independent oracle for the pair factor (t_j - t_i)/((1+beta t_i)(t_i (+) t_j)):
// column b = -k is (-1)^k (2+beta t)(1+beta t)^{-k-2} for k >= 1 and
// (1+beta t)^{-2} for k = 0, derived by splitting the telescoping sum.
BetaPoly pair_factor_column_oracle(int a, int b) {
    if (b > 0 || a < 0 || a + b < 0) return BetaPoly::zero();
    const int k = -b;
    const int c = a - k;  // power of t_i inside the univariate column series
    auto binom = [](long long n, long long kk) {
        Rational num(1), den(1);
        for (long long i = 0; i < kk; ++i) {
            num *= Rational(n - i);
            den *= Rational(i + 1);
        }
        return num / den;
    };
    auto coeff_inv_pow = [&](int q, int cc) {
        // coefficient of t^cc in (1+beta t)^{-q}
        Rational v = binom(q - 1 + cc, cc);
        if (cc % 2) v = -v;
        return v;
    };
    if (k == 0) return bp(c, coeff_inv_pow(2, c));
    Rational v = Rational(2) * coeff_inv_pow(k + 2, c);
    if (c >= 1) v += coeff_inv_pow(k + 2, c - 1);
    if (k % 2) v = -v;
    return bp(c, v);  // beta exponent = |s| = a + b = c
}

}  // namespace

TEST_CASE("laurent_arith monomials and identity") {
    auto ctx = make_scalar_context();
    auto a = ConeLaurentSeries::monomial(ctx, 2, ev({1, 0}), BetaPoly::one());
    auto b = ConeLaurentSeries::monomial(ctx, 2, ev({-1, 0}), BetaPoly::one());
    CHECK(b.shift() == std::vector<int>{1, 0});
    auto prod = laurent_arith(a, b, ArithKind::mul);
    CHECK(prod.scalar_coeff_at(ev({0, 0})) == BetaPoly::one());
    CHECK(prod.term_count() == 1);

    auto one = ConeLaurentSeries::one(ctx, 2);
    auto again = laurent_arith(prod, one, ArithKind::mul);
    CHECK(again.scalar_coeff_at(ev({0, 0})) == BetaPoly::one());
    CHECK(again.term_count() == 1);
}

TEST_CASE("cauchy product along the diagonal") {
    // (sum (-1)^k t1^k t2^-k) * (sum t1^k t2^-k), coefficients 1,0,1,0,1
    auto ctx = make_scalar_context();
    Window w = Window::uniform(2, 4);
    auto alt = ConeLaurentSeries::zero(ctx, 2, w);
    auto pos = ConeLaurentSeries::zero(ctx, 2, w);
    for (int k = 0; k <= 4; ++k) {
        alt.add_term(ev({k, -k}), BetaPoly::constant(Rational(k % 2 ? -1 : 1)));
        pos.add_term(ev({k, -k}), BetaPoly::one());
    }
    auto prod = mul(alt, pos);
    for (int k = 0; k <= 4; ++k) {
        CHECK(prod.scalar_coeff_at(ev({k, -k})) ==
              (k % 2 ? BetaPoly::zero() : BetaPoly::one()));
    }
}

TEST_CASE("cone violation is a hard error") {
    auto ctx = make_scalar_context();
    auto s = ConeLaurentSeries::zero(ctx, 2, Window::uniform(2, 3));
    CHECK_THROWS_AS(s.add_term(ev({-1, 0}), BetaPoly::one()), std::domain_error);
    CHECK_THROWS_AS(s.add_term(ev({1, -2}), BetaPoly::one()), std::domain_error);
    CHECK_NOTHROW(s.add_term(ev({1, -1}), BetaPoly::one()));
}

TEST_CASE("coefficients outside the exactness region throw") {
    auto ctx = make_scalar_context();
    Window w = Window::uniform(1, 3);
    auto s = expand_inv_two_plus_beta_t(1, w);
    CHECK_NOTHROW(s.coeff_at(ev({3})));
    CHECK_THROWS_AS(s.coeff_at(ev({4})), std::out_of_range);
    // outside the cone the coefficient is known to vanish
    CHECK(s.scalar_coeff_at(ev({-2})) == BetaPoly::zero());
}

TEST_CASE("expand_inv_two_plus_beta_t per-coefficient values") {
    Window w = Window::uniform(1, 6);
    auto s = expand_inv_two_plus_beta_t(1, w);
    CHECK(s.scalar_coeff_at(ev({0})) == bp(0, Rational(1, 2)));
    CHECK(s.scalar_coeff_at(ev({1})) == bp(1, Rational(-1, 4)));
    CHECK(s.scalar_coeff_at(ev({2})) == bp(2, Rational(1, 8)));

    // inverse check: (2 + beta t) * series == 1 inside the window
    auto ctx = make_scalar_context();
    auto two = ConeLaurentSeries::monomial(ctx, 1, ev({0}), BetaPoly::constant(Rational(2)));
    auto bt = ConeLaurentSeries::monomial(ctx, 1, ev({1}), BetaPoly::beta_power(1));
    auto back = mul(add(two, bt), s);
    CHECK(back.scalar_coeff_at(ev({0})) == BetaPoly::one());
    for (int k = 1; k <= 6; ++k) CHECK(back.scalar_coeff_at(ev({k})) == BetaPoly::zero());
    CHECK(s.check_degree(0));
}

TEST_CASE("pair product factor: low-order coefficients and support") {
    Window w = Window::uniform(2, 6);
    auto g = expand_pair_product_factor(1, 2, w);
    CHECK(g.scalar_coeff_at(ev({0, 0})) == BetaPoly::one());
    CHECK(g.scalar_coeff_at(ev({1, -1})) == bp(0, Rational(-2)));
    CHECK(g.check_degree(0));

    for (const auto& [s, c] : g.terms()) {
        CHECK(s[0] >= 0);
        CHECK(s[0] + s[1] >= 0);
        CHECK(s[1] <= 0);  // no positive powers of the later variable
        CHECK(c.constant_part().is_integral());
    }

    // column-series oracle
    for (int a = 0; a <= 5; ++a)
        for (int b = -5; b <= 0; ++b) {
            if (a + b < 0) continue;
            CHECK(g.scalar_coeff_at(ev({a, b})) == pair_factor_column_oracle(a, b));
        }
}

TEST_CASE("pair product factor at beta = 0 is the classical series") {
    // (1 - t_i/t_j)/(1 + t_i/t_j) = 1 - 2x + 2x^2 - ... in x = t_i/t_j
    Window w = Window::uniform(2, 6);
    auto g = expand_pair_product_factor(1, 2, w).specialized_at(Rational(0));
    for (int k = 0; k <= 6; ++k) {
        Rational expect = k == 0 ? Rational(1) : Rational(k % 2 ? -2 : 2);
        CHECK(g.scalar_coeff_at(ev({k, -k})) == BetaPoly::constant(expect));
    }
    // off-diagonal entries vanish at beta = 0
    CHECK(g.scalar_coeff_at(ev({2, -1})) == BetaPoly::zero());
}

TEST_CASE("pfaffian entry factor m=1") {
    Window w = Window::uniform(2, 6);
    auto f = expand_pfaffian_entry_factor(1, 2, 1, w);
    CHECK(f.scalar_coeff_at(ev({0, 0})) == BetaPoly::one());
    CHECK(f.scalar_coeff_at(ev({1, -1})) == bp(0, Rational(-2)));
    // j = 2m: no positive exponents of t_j
    for (const auto& [s, c] : f.terms()) CHECK(s[1] <= 0);

    // oracle: entry * (1 - t_i/tbar_j) == (1+beta tbar_1)^0 (1+beta tbar_2)^0 (1 - tbar_i/tbar_j)
    auto ctx = make_scalar_context();
    auto poly = ConeLaurentSeries::one(ctx, 2);
    {
        // 1 - t_1/tbar_2 = 1 + t_1/t_2 + beta t_1
        auto a = ConeLaurentSeries::monomial(ctx, 2, ev({1, -1}), BetaPoly::one());
        auto b = ConeLaurentSeries::monomial(ctx, 2, ev({1, 0}), BetaPoly::beta_power(1));
        poly = add(add(poly, a), b);
    }
    auto lhs = mul(f, poly);
    // 1 - tbar_1/tbar_2 = 1 - (t_1/t_2)(1+beta t_2)/(1+beta t_1)
    auto inv1 = power_one_plus_beta_t(ctx, 2, 1, -1, w);
    auto poly2 = ConeLaurentSeries::one(ctx, 2);
    poly2 = add(poly2, ConeLaurentSeries::monomial(ctx, 2, ev({0, 1}), BetaPoly::beta_power(1)));
    auto rhs = add(ConeLaurentSeries::one(ctx, 2),
                   -mul_monomial(mul(poly2, inv1), ev({1, -1}),
                                 AlgebraElement::one(ctx)));
    CHECK(series_equal_on_claimed(lhs, rhs, 4));
}

TEST_CASE("entry factor with j < 2m has positive t_j powers") {
    Window w = Window::uniform(3, 4);
    auto f = expand_pfaffian_entry_factor(1, 2, 2, w);  // 2m = 4, j = 2 < 4
    bool has_positive_j = false;
    for (const auto& [s, c] : f.terms()) has_positive_j |= s[1] > 0;
    CHECK(has_positive_j);
    CHECK_THROWS(expand_pfaffian_entry_factor(2, 2, 1, w));
}

TEST_CASE("window stability") {
    Window w = Window::uniform(1, 4);
    CHECK(window_stability_check(
        [](const Window& win) { return expand_inv_two_plus_beta_t(1, win); }, w));

    Window w2 = Window::uniform(2, 4);
    CHECK(window_stability_check(
        [](const Window& win) { return expand_pair_product_factor(1, 2, win); }, w2));

    // negative control: a builder that mis-reports its window
    auto cheat = [](const Window& win) {
        auto ctx = make_scalar_context();
        ConeLaurentSeries s = ConeLaurentSeries::zero(ctx, 1, win);
        // claims exactness on the whole window but only fills half of it
        long long cap = std::min<long long>(win.upper[0], 2);
        for (int k = 0; k <= cap; ++k) s.add_term(ev({k}), BetaPoly::constant(Rational(1)));
        return s;
    };
    CHECK_FALSE(window_stability_check(cheat, Window::uniform(1, 2)));
}

TEST_CASE("grading bookkeeping through products") {
    Window w = Window::uniform(2, 4);
    auto g = expand_pair_product_factor(1, 2, w);
    auto f = expand_inv_two_plus_beta_t(1, w);
    auto p = mul(g, f);
    CHECK(p.degree() == 0);
    CHECK(p.check_degree(0));
    auto shifted = mul_monomial(p, ev({2, 1}), AlgebraElement::one(p.context()));
    CHECK(shifted.degree() == 3);
}

TEST_CASE("series addition combines shifts soundly") {
    auto ctx = make_scalar_context();
    auto a = ConeLaurentSeries::monomial(ctx, 2, ev({-1, 1}), BetaPoly::one());
    auto b = ConeLaurentSeries::one(ctx, 2);
    auto s = add(a, b);
    CHECK(s.scalar_coeff_at(ev({-1, 1})) == BetaPoly::one());
    CHECK(s.scalar_coeff_at(ev({0, 0})) == BetaPoly::one());
    // shift must certify the union support: componentwise max
    CHECK(s.shift()[0] == 1);
}
