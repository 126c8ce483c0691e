#pragma once

// Polynomials in the coefficient class beta over the exact rationals.
// beta has cohomological degree -1, so the term q*beta^k has degree -k.
// Terms are kept sorted by exponent with no stored zeros, so equality is
// structural.

#include "ckgrass/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

namespace ckgrass {

class BetaPoly {
public:
    using Term = std::pair<int, Rational>;  // (beta exponent >= 0, coefficient)
    using Terms = boost::container::small_vector<Term, 2>;

    BetaPoly() = default;  // zero

    static BetaPoly zero() { return BetaPoly{}; }
    static BetaPoly one() { return constant(Rational(1)); }
    static BetaPoly constant(const Rational& c);
    // c * beta^k
    static BetaPoly beta_power(int k, const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    // Single beta^0 term (or zero).
    bool is_rational_constant() const;
    // Single term q*beta^k (or zero); used by homogeneity bookkeeping.
    bool is_monomial() const { return terms_.size() <= 1; }
    bool is_integral() const;  // all coefficients have denominator 1

    const Terms& terms() const { return terms_; }
    Rational coeff(int beta_exponent) const;
    int max_exponent() const;  // -1 for zero
    int min_exponent() const;  // -1 for zero

    BetaPoly& operator+=(const BetaPoly& rhs);
    BetaPoly& operator-=(const BetaPoly& rhs);
    friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { a += b; return a; }
    friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { a -= b; return a; }
    friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b);
    BetaPoly operator-() const;
    BetaPoly scaled(const Rational& c) const;

    // Drop all terms with exponent > max_exp (beta-adic truncation).
    BetaPoly truncated(int max_exp) const;

    // Substitute a numeric value for beta.
    Rational evaluate(const Rational& beta_value) const;

    bool has_power_of_two_denominators() const;

    bool operator==(const BetaPoly&) const = default;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BetaPoly& p);

private:
    void add_term(int exponent, const Rational& c);
    Terms terms_;
};

enum class ArithKind { add, mul };

// Spec-level entry point for exact scalar arithmetic.
BetaPoly scalar_arith(const BetaPoly& a, const BetaPoly& b, ArithKind kind);

}  // namespace ckgrass
