#include "ckgrass/beta_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ckgrass {

BetaPoly BetaPoly::constant(const Rational& c) {
    BetaPoly p;
    p.add_term(0, c);
    return p;
}

BetaPoly BetaPoly::beta_power(int k, const Rational& c) {
    if (k < 0) throw std::invalid_argument("BetaPoly: negative beta exponent");
    BetaPoly p;
    p.add_term(k, c);
    return p;
}

bool BetaPoly::is_rational_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

bool BetaPoly::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

Rational BetaPoly::coeff(int beta_exponent) const {
    for (const auto& [e, c] : terms_)
        if (e == beta_exponent) return c;
    return Rational(0);
}

int BetaPoly::max_exponent() const { return terms_.empty() ? -1 : terms_.back().first; }
int BetaPoly::min_exponent() const { return terms_.empty() ? -1 : terms_.front().first; }

void BetaPoly::add_term(int exponent, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{exponent, c});
    }
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
    BetaPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

BetaPoly BetaPoly::operator-() const {
    BetaPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

BetaPoly BetaPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    BetaPoly out = *this;
    for (auto& [e, q] : out.terms_) q *= c;
    return out;
}

BetaPoly BetaPoly::truncated(int max_exp) const {
    BetaPoly out;
    for (const auto& [e, c] : terms_)
        if (e <= max_exp) out.terms_.push_back({e, c});
    return out;
}

Rational BetaPoly::evaluate(const Rational& beta_value) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational p(1);
        for (int i = 0; i < e; ++i) p *= beta_value;
        acc += c * p;
    }
    return acc;
}

bool BetaPoly::has_power_of_two_denominators() const {
    for (const auto& [e, c] : terms_)
        if (!has_power_of_two_denominator(c)) return false;
    return true;
}

std::string BetaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e == 1) os << "*b";
        else if (e > 1) os << "*b^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BetaPoly& p) { return os << p.to_string(); }

BetaPoly scalar_arith(const BetaPoly& a, const BetaPoly& b, ArithKind kind) {
    return kind == ArithKind::add ? a + b : a * b;
}

}  // namespace ckgrass
