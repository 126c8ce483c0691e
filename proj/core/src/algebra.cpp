#include "ckgrass/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ckgrass {

AlgebraContext::AlgebraContext(std::vector<GeneratorSpec> generators, int truncation_degree)
    : gens_(std::move(generators)), truncation_(truncation_degree) {
    if (truncation_ < 0) throw std::invalid_argument("AlgebraContext: truncation must be >= 0");
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (g.degree < 1) throw std::invalid_argument("AlgebraContext: generator degree must be >= 1");
        if (!names.insert(g.name).second)
            throw std::invalid_argument("AlgebraContext: duplicate generator name " + g.name);
    }
}

int AlgebraContext::find(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool AlgebraContext::same_as(const AlgebraContext& other) const {
    if (this == &other) return true;
    if (truncation_ != other.truncation_ || gens_.size() != other.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != other.gens_[i].name || gens_[i].degree != other.gens_[i].degree)
            return false;
    return true;
}

ContextPtr make_context(std::vector<GeneratorSpec> generators, int truncation_degree) {
    return std::make_shared<const AlgebraContext>(std::move(generators), truncation_degree);
}

ContextPtr make_scalar_context() { return make_context({}, 0); }

Monomial::Monomial(const AlgebraContext& ctx, Exps exps) : exps_(std::move(exps)) {
    if (exps_.size() != ctx.generator_count())
        throw std::invalid_argument("Monomial: exponent count mismatch");
    unsigned d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        d += static_cast<unsigned>(exps_[i]) * static_cast<unsigned>(ctx.generator(i).degree);
    degree_ = d;
}

Monomial Monomial::unit(const AlgebraContext& ctx) {
    return Monomial(ctx, Exps(ctx.generator_count(), 0));
}

Monomial Monomial::product(const AlgebraContext& ctx, const Monomial& a, const Monomial& b) {
    Exps e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<std::uint16_t>(e[i] + b.exps_[i]);
    Monomial m;
    m.exps_ = std::move(e);
    m.degree_ = a.degree_ + b.degree_;
    (void)ctx;
    return m;
}

AlgebraElement AlgebraElement::one(ContextPtr ctx) { return constant(std::move(ctx), Rational(1)); }

AlgebraElement AlgebraElement::constant(ContextPtr ctx, const Rational& c) {
    return scalar(std::move(ctx), BetaPoly::constant(c));
}

AlgebraElement AlgebraElement::scalar(ContextPtr ctx, const BetaPoly& c) {
    AlgebraElement e(std::move(ctx));
    if (!c.is_zero()) e.terms_.emplace(Monomial::unit(*e.ctx_), c);
    return e;
}

AlgebraElement AlgebraElement::generator(ContextPtr ctx, std::size_t index) {
    if (index >= ctx->generator_count())
        throw std::invalid_argument("AlgebraElement: generator index out of range");
    AlgebraElement e(ctx);
    Monomial::Exps exps(ctx->generator_count(), 0);
    exps[index] = 1;
    Monomial m(*ctx, std::move(exps));
    if (m.degree() <= static_cast<unsigned>(ctx->truncation()))
        e.terms_.emplace(std::move(m), BetaPoly::one());
    e.homogeneous_ = ctx->generator(index).degree;
    return e;
}

AlgebraElement AlgebraElement::generator(ContextPtr ctx, const std::string& name) {
    int i = ctx->find(name);
    if (i < 0) throw std::invalid_argument("AlgebraElement: unknown generator " + name);
    return generator(std::move(ctx), static_cast<std::size_t>(i));
}

void AlgebraElement::require_context() const {
    if (!ctx_) throw std::logic_error("AlgebraElement: null context");
}

bool AlgebraElement::compatible_with(const AlgebraElement& other) const {
    return ctx_ && other.ctx_ && (ctx_ == other.ctx_ || ctx_->same_as(*other.ctx_));
}

BetaPoly AlgebraElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BetaPoly::zero() : it->second;
}

BetaPoly AlgebraElement::constant_part() const {
    require_context();
    return coeff(Monomial::unit(*ctx_));
}

void AlgebraElement::add_term(const Monomial& m, const BetaPoly& c) {
    require_context();
    if (c.is_zero()) return;
    if (m.degree() > static_cast<unsigned>(ctx_->truncation())) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    if (!compatible_with(rhs)) throw std::invalid_argument("AlgebraElement: context mismatch");
    if (homogeneous_ && rhs.homogeneous_) {
        if (is_zero()) homogeneous_ = rhs.homogeneous_;
        else if (!rhs.is_zero() && *homogeneous_ != *rhs.homogeneous_) homogeneous_.reset();
    } else if (!rhs.is_zero()) {
        homogeneous_.reset();
    }
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    return *this += -rhs;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (!a.compatible_with(b)) throw std::invalid_argument("AlgebraElement: context mismatch");
    const AlgebraContext& ctx = *a.context();
    const unsigned limit = static_cast<unsigned>(ctx.truncation());
    AlgebraElement out(a.context());
    // Maps iterate degree-major, so the inner loop can stop at the truncation.
    for (const auto& [ma, ca] : a.terms()) {
        if (ma.degree() > limit) break;
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.degree() + mb.degree() > limit) break;
            out.add_term(Monomial::product(ctx, ma, mb), ca * cb);
        }
    }
    if (a.homogeneous_degree() && b.homogeneous_degree())
        out.homogeneous_ = *a.homogeneous_degree() + *b.homogeneous_degree();
    return out;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    return scaled(BetaPoly::constant(c));
}

AlgebraElement AlgebraElement::scaled(const BetaPoly& c) const {
    AlgebraElement out(ctx_);
    if (c.is_zero()) return out;
    for (const auto& [m, q] : terms_) out.add_term(m, q * c);
    if (homogeneous_ && c.is_monomial() && !c.is_zero())
        out.homogeneous_ = *homogeneous_ - c.terms().front().first;
    return out;
}

AlgebraElement AlgebraElement::pow(unsigned k) const {
    require_context();
    AlgebraElement acc = one(ctx_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

AlgebraElement AlgebraElement::inverted() const {
    require_context();
    const BetaPoly c0 = constant_part();
    if (!c0.is_rational_constant() || c0.is_zero())
        throw std::domain_error(
            "invert_unit: generator-degree-0 part must be a nonzero beta-free rational");
    const Rational c = c0.coeff(0);
    // a = c(1 + g) with g nilpotent up to truncation; inverse = (1/c) sum (-g)^k.
    AlgebraElement g = *this;
    g.terms_.erase(Monomial::unit(*ctx_));
    g.homogeneous_.reset();
    g = g.scaled(Rational(1) / c);
    AlgebraElement acc = one(ctx_);
    AlgebraElement p = one(ctx_);
    for (int k = 1; k <= ctx_->truncation(); ++k) {
        p = p * g;
        if (p.is_zero()) break;
        if (k % 2 == 1) acc -= p;
        else acc += p;
    }
    return acc.scaled(Rational(1) / c);
}

AlgebraElement AlgebraElement::specialized_at(const Rational& beta_value) const {
    AlgebraElement out(ctx_);
    for (const auto& [m, c] : terms_) {
        Rational v = c.evaluate(beta_value);
        if (v != 0) out.terms_.emplace(m, BetaPoly::constant(v));
    }
    return out;
}

bool AlgebraElement::check_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [k, q] : c.terms())
            if (static_cast<int>(m.degree()) - k != d) return false;
    return true;
}

AlgebraElement& AlgebraElement::flag_homogeneous(int d) {
    if (!check_homogeneous(d))
        throw std::logic_error("AlgebraElement: homogeneity flag does not hold");
    homogeneous_ = d;
    return *this;
}

bool AlgebraElement::has_power_of_two_denominators() const {
    for (const auto& [m, c] : terms_)
        if (!c.has_power_of_two_denominators()) return false;
    return true;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
    if (!compatible_with(rhs)) return false;
    return terms_ == rhs.terms_;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        for (std::size_t i = 0; i < m.exponents().size(); ++i) {
            if (m.exponents()[i] == 0) continue;
            os << "*" << ctx_->generator(i).name;
            if (m.exponents()[i] > 1) os << "^" << m.exponents()[i];
        }
    }
    return os.str();
}

AlgebraElement elem_arith(const AlgebraElement& a, const AlgebraElement& b, ArithKind kind) {
    return kind == ArithKind::add ? a + b : a * b;
}

AlgebraElement invert_unit(const AlgebraElement& a) { return a.inverted(); }

AlgebraElement specialize_beta(const AlgebraElement& a, const Rational& value) {
    if (value != 0 && value != -1)
        throw std::invalid_argument("specialize_beta: value must be 0 or -1");
    return a.specialized_at(value);
}

}  // namespace ckgrass
