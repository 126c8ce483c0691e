#pragma once

// Truncated graded-commutative polynomial algebras over Q[beta].
//
// An AlgebraContext fixes an ordered list of named generators with positive
// degrees and a truncation bound D: monomials of generator-degree > D are
// identically zero. Arithmetic is exact below the truncation. The grading is
// deg(x_i) = degree_i, deg(beta) = -1, so an element may carry an optional
// homogeneity flag d meaning every term q*beta^k*x^e has |e|_deg - k = d.

#include "ckgrass/beta_poly.hpp"

#include <boost/container/small_vector.hpp>

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ckgrass {

struct GeneratorSpec {
    std::string name;
    int degree = 1;
};

class AlgebraContext {
public:
    AlgebraContext(std::vector<GeneratorSpec> generators, int truncation_degree);

    std::size_t generator_count() const { return gens_.size(); }
    const GeneratorSpec& generator(std::size_t i) const { return gens_[i]; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    int truncation() const { return truncation_; }
    // Index of a generator by name, -1 if absent.
    int find(const std::string& name) const;
    bool same_as(const AlgebraContext& other) const;

private:
    std::vector<GeneratorSpec> gens_;
    int truncation_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

ContextPtr make_context(std::vector<GeneratorSpec> generators, int truncation_degree);
// Context with no generators: elements are just Q[beta] scalars.
ContextPtr make_scalar_context();

// Exponent vector with its generator-degree cached; ordered graded-lex so that
// map iteration is canonical and degree-truncated products can stop early.
class Monomial {
public:
    using Exps = boost::container::small_vector<std::uint16_t, 20>;

    Monomial() = default;
    Monomial(const AlgebraContext& ctx, Exps exps);

    unsigned degree() const { return degree_; }
    const Exps& exponents() const { return exps_; }
    bool is_unit() const { return degree_ == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return std::lexicographical_compare(a.exps_.begin(), a.exps_.end(),
                                            b.exps_.begin(), b.exps_.end());
    }

    static Monomial unit(const AlgebraContext& ctx);
    static Monomial product(const AlgebraContext& ctx, const Monomial& a, const Monomial& b);

private:
    unsigned degree_ = 0;
    Exps exps_;
};

class AlgebraElement {
public:
    using TermMap = std::map<Monomial, BetaPoly>;

    AlgebraElement() = default;  // null element; only assignable
    explicit AlgebraElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static AlgebraElement zero(ContextPtr ctx) { return AlgebraElement(std::move(ctx)); }
    static AlgebraElement one(ContextPtr ctx);
    static AlgebraElement constant(ContextPtr ctx, const Rational& c);
    static AlgebraElement scalar(ContextPtr ctx, const BetaPoly& c);
    static AlgebraElement generator(ContextPtr ctx, std::size_t index);
    static AlgebraElement generator(ContextPtr ctx, const std::string& name);

    const ContextPtr& context() const { return ctx_; }
    bool compatible_with(const AlgebraElement& other) const;

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    BetaPoly coeff(const Monomial& m) const;
    // Coefficient of the degree-0 monomial.
    BetaPoly constant_part() const;
    bool has_zero_constant_term() const { return constant_part().is_zero(); }

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { a += b; return a; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { a -= b; return a; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Rational& c) const;
    AlgebraElement scaled(const BetaPoly& c) const;
    AlgebraElement pow(unsigned k) const;

    // Multiplicative inverse up to truncation. Requires the generator-degree-0
    // part to be a nonzero beta-free rational (throws std::domain_error).
    AlgebraElement inverted() const;

    // Ring homomorphism beta -> value.
    AlgebraElement specialized_at(const Rational& beta_value) const;

    // Homogeneity bookkeeping.
    std::optional<int> homogeneous_degree() const { return homogeneous_; }
    bool check_homogeneous(int d) const;
    // Verifies and sets the flag (throws std::logic_error if the check fails).
    AlgebraElement& flag_homogeneous(int d);

    bool has_power_of_two_denominators() const;
    bool operator==(const AlgebraElement& rhs) const;

    // Raw term insertion for builders; maintains canonical form.
    void add_term(const Monomial& m, const BetaPoly& c);

    std::string to_string() const;

private:
    void require_context() const;
    ContextPtr ctx_;
    TermMap terms_;
    std::optional<int> homogeneous_;
};

// Spec-level entry points.
AlgebraElement elem_arith(const AlgebraElement& a, const AlgebraElement& b, ArithKind kind);
AlgebraElement invert_unit(const AlgebraElement& a);
// value must be 0 or -1.
AlgebraElement specialize_beta(const AlgebraElement& a, const Rational& value);

}  // namespace ckgrass
