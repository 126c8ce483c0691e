#include "ckgrass/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ckgrass {

namespace {

int clamp_bound(long long v) {
    if (v > kUnbounded) return kUnbounded;
    if (v < -kUnbounded) return -kUnbounded;
    return static_cast<int>(v);
}

BigInt binomial(long long n, long long k) {
    if (k < 0) return 0;
    BigInt num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

}  // namespace

Window::Window(int r, std::vector<int> lo, std::vector<int> hi)
    : Window(r, std::move(lo), std::move(hi), {}) {
    pscap.assign(static_cast<std::size_t>(vars), 0);
    long long acc = 0;
    for (int i = 0; i < vars; ++i) {
        acc += std::max(upper[i], 0);
        pscap[i] = clamp_bound(acc);
    }
}

Window::Window(int r, std::vector<int> lo, std::vector<int> hi, std::vector<int> caps)
    : vars(r), lower(std::move(lo)), upper(std::move(hi)), pscap(std::move(caps)) {
    if (vars < 1) throw std::invalid_argument("Window: need at least one variable");
    if (lower.size() != static_cast<std::size_t>(vars) ||
        upper.size() != static_cast<std::size_t>(vars))
        throw std::invalid_argument("Window: bound vectors must have length r");
    for (int i = 0; i < vars; ++i)
        if (lower[i] > upper[i]) throw std::invalid_argument("Window: lower_i > upper_i");
    if (pscap.empty()) pscap.assign(static_cast<std::size_t>(vars), kUnbounded);
    if (pscap.size() != static_cast<std::size_t>(vars))
        throw std::invalid_argument("Window: pscap must have length r");
}

Window Window::uniform(int r, int radius) {
    if (radius < 0) throw std::invalid_argument("Window::uniform: radius must be >= 0");
    std::vector<int> lo(r, -radius), hi(r, radius), caps(r);
    for (int i = 0; i < r; ++i) caps[i] = clamp_bound(static_cast<long long>(i + 1) * radius);
    return Window(r, std::move(lo), std::move(hi), std::move(caps));
}

Window Window::from_caps(std::vector<int> caps) {
    int r = static_cast<int>(caps.size());
    std::vector<int> lo(r), hi(r);
    for (int i = 0; i < r; ++i) {
        lo[i] = clamp_bound(-static_cast<long long>(i > 0 ? caps[i - 1] : 0));
        hi[i] = caps[i];
    }
    return Window(r, std::move(lo), std::move(hi), std::move(caps));
}

Window Window::unbounded(int r) {
    return Window(r, std::vector<int>(r, -kUnbounded), std::vector<int>(r, kUnbounded),
                  std::vector<int>(r, kUnbounded));
}

Window Window::doubled() const {
    Window w = *this;
    for (int i = 0; i < vars; ++i) {
        w.lower[i] = clamp_bound(2LL * lower[i]);
        w.upper[i] = clamp_bound(2LL * upper[i]);
        w.pscap[i] = clamp_bound(2LL * pscap[i]);
    }
    return w;
}

bool Window::contains_box(const std::vector<int>& s) const {
    for (int i = 0; i < vars; ++i)
        if (s[i] < lower[i] || s[i] > upper[i]) return false;
    return true;
}

// --- ConeLaurentSeries ----------------------------------------------------

ConeLaurentSeries::ConeLaurentSeries(ContextPtr ctx, int vars, Window window)
    : ctx_(std::move(ctx)), vars_(vars), shift_(vars, 0), window_(std::move(window)),
      active_(vars, false) {
    if (vars_ < 1) throw std::invalid_argument("ConeLaurentSeries: need at least one variable");
    if (window_.vars != vars_)
        throw std::invalid_argument("ConeLaurentSeries: window variable count mismatch");
}

ConeLaurentSeries ConeLaurentSeries::zero(ContextPtr ctx, int vars, Window w) {
    return ConeLaurentSeries(std::move(ctx), vars, std::move(w));
}

ConeLaurentSeries ConeLaurentSeries::one(ContextPtr ctx, int vars) {
    ConeLaurentSeries s(ctx, vars, Window::unbounded(vars));
    s.add_term(ExpVec(vars, 0), AlgebraElement::one(ctx));
    s.degree_ = 0;
    return s;
}

ConeLaurentSeries ConeLaurentSeries::monomial(ContextPtr ctx, int vars, const ExpVec& exps,
                                              const AlgebraElement& c) {
    ConeLaurentSeries s(ctx, vars, Window::unbounded(vars));
    // Shift certificate: enough to push the single exponent into the cone.
    for (int i = 0; i < vars; ++i) s.shift_[i] = std::max(0, -exps[i]);
    s.add_term(exps, c);
    int total = 0;
    for (int e : exps) total += e;
    if (auto d = c.homogeneous_degree()) s.degree_ = *d + total;
    return s;
}

ConeLaurentSeries ConeLaurentSeries::monomial(ContextPtr ctx, int vars, const ExpVec& exps,
                                              const BetaPoly& c) {
    return monomial(ctx, vars, exps, AlgebraElement::scalar(ctx, c));
}

bool ConeLaurentSeries::storable_at(const ExpVec& s) const {
    long long run = 0;
    for (int i = 0; i < vars_; ++i) {
        run += shift_[i] + s[i];
        if (run < 0) return false;  // cone violation
        if (run > window_.pscap[i]) return false;
        if (s[i] < window_.lower[i] || s[i] > window_.upper[i]) return false;
    }
    return true;
}

bool ConeLaurentSeries::is_exact_at(const ExpVec& s) const {
    // Off the tracked variables or outside the cone the coefficient is known
    // to vanish.
    for (int i = 0; i < vars_; ++i)
        if (!active_[i] && s[i] != 0) return true;
    long long run = 0;
    bool in_cone = true;
    for (int i = 0; i < vars_; ++i) {
        run += shift_[i] + s[i];
        if (run < 0) { in_cone = false; break; }
    }
    if (!in_cone) return true;
    return storable_at(s);
}

AlgebraElement ConeLaurentSeries::coeff_at(const ExpVec& s) const {
    auto it = terms_.find(s);
    if (it != terms_.end()) return it->second;
    if (is_exact_at(s)) return AlgebraElement::zero(ctx_);
    throw std::out_of_range("ConeLaurentSeries: coefficient outside the exactness region");
}

BetaPoly ConeLaurentSeries::scalar_coeff_at(const ExpVec& s) const {
    return coeff_at(s).constant_part();
}

void ConeLaurentSeries::add_term(const ExpVec& s, const AlgebraElement& c) {
    if (static_cast<int>(s.size()) != vars_)
        throw std::invalid_argument("ConeLaurentSeries: exponent arity mismatch");
    if (c.is_zero()) return;
    long long run = 0;
    for (int i = 0; i < vars_; ++i) {
        run += shift_[i] + s[i];
        if (run < 0)
            throw std::domain_error("ConeLaurentSeries: term leaves the support cone");
    }
    if (!storable_at(s)) return;  // outside the claimed window: clipped
    for (int i = 0; i < vars_; ++i)
        if (s[i] != 0) active_[i] = true;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ConeLaurentSeries::add_term(const ExpVec& s, const BetaPoly& c) {
    add_term(s, AlgebraElement::scalar(ctx_, c));
}

ConeLaurentSeries ConeLaurentSeries::operator-() const {
    ConeLaurentSeries out = *this;
    for (auto& [s, c] : out.terms_) c = -c;
    return out;
}

ConeLaurentSeries ConeLaurentSeries::scaled(const BetaPoly& c) const {
    ConeLaurentSeries out = *this;
    out.terms_.clear();
    for (const auto& [s, v] : terms_) {
        AlgebraElement w = v.scaled(c);
        if (!w.is_zero()) out.terms_.emplace(s, std::move(w));
    }
    if (degree_ && c.is_monomial() && !c.is_zero())
        out.degree_ = *degree_ - c.terms().front().first;
    else
        out.degree_.reset();
    return out;
}

ConeLaurentSeries ConeLaurentSeries::specialized_at(const Rational& beta_value) const {
    ConeLaurentSeries out = *this;
    out.terms_.clear();
    out.degree_.reset();
    for (const auto& [s, v] : terms_) {
        AlgebraElement w = v.specialized_at(beta_value);
        if (!w.is_zero()) out.terms_.emplace(s, std::move(w));
    }
    return out;
}

bool ConeLaurentSeries::check_degree(int d) const {
    for (const auto& [s, c] : terms_) {
        int total = 0;
        for (int e : s) total += e;
        if (!c.check_homogeneous(d - total)) return false;
    }
    return true;
}

std::string ConeLaurentSeries::to_string() const {
    std::ostringstream os;
    for (const auto& [s, c] : terms_) {
        os << "t^(";
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
        os << "): " << c.to_string() << "\n";
    }
    return os.str();
}

namespace {

void partial_sums(const std::vector<int>& shift, std::vector<long long>& out) {
    long long run = 0;
    for (std::size_t i = 0; i < shift.size(); ++i) {
        run += shift[i];
        out[i] = run;
    }
}

// entire == true means every coefficient of the series is known (stored terms
// are the complete support). Modeled as a fully unbounded window.
bool looks_entire(const ConeLaurentSeries& s) {
    const Window& w = s.window();
    for (int i = 0; i < w.vars; ++i)
        if (w.lower[i] != -kUnbounded || w.upper[i] != kUnbounded || w.pscap[i] != kUnbounded)
            return false;
    return true;
}

}  // namespace

ConeLaurentSeries add(const ConeLaurentSeries& a, const ConeLaurentSeries& b) {
    if (a.vars_ != b.vars_ || !a.ctx_ || !b.ctx_ ||
        (a.ctx_ != b.ctx_ && !a.ctx_->same_as(*b.ctx_)))
        throw std::invalid_argument("laurent add: incompatible series");
    const int r = a.vars_;
    std::vector<int> shift(r);
    for (int i = 0; i < r; ++i) shift[i] = std::max(a.shift_[i], b.shift_[i]);

    std::vector<long long> psa(r), psb(r), pso(r);
    partial_sums(a.shift_, psa);
    partial_sums(b.shift_, psb);
    partial_sums(shift, pso);

    std::vector<int> lo(r), hi(r), caps(r);
    for (int i = 0; i < r; ++i) {
        // Box constraints come only from inputs that track the variable.
        long long l = -kUnbounded, h = kUnbounded;
        if (a.active_[i]) { l = std::max<long long>(l, a.window_.lower[i]); h = std::min<long long>(h, a.window_.upper[i]); }
        if (b.active_[i]) { l = std::max<long long>(l, b.window_.lower[i]); h = std::min<long long>(h, b.window_.upper[i]); }
        if (l > h) l = h;  // degenerate but keep a valid window
        lo[i] = clamp_bound(l);
        hi[i] = clamp_bound(h);
        long long ca = static_cast<long long>(a.window_.pscap[i]) - psa[i];
        long long cb = static_cast<long long>(b.window_.pscap[i]) - psb[i];
        caps[i] = clamp_bound(std::min(ca, cb) + pso[i]);
    }

    ConeLaurentSeries out(a.ctx_, r, Window(r, std::move(lo), std::move(hi), std::move(caps)));
    out.shift_ = shift;
    for (int i = 0; i < r; ++i) out.active_[i] = a.active_[i] || b.active_[i];
    for (const auto& [s, c] : a.terms_) out.add_term(s, c);
    for (const auto& [s, c] : b.terms_) out.add_term(s, c);
    if (a.terms_.empty() && b.degree_) out.degree_ = b.degree_;
    else if (b.terms_.empty() && a.degree_) out.degree_ = a.degree_;
    else if (a.degree_ && b.degree_ && *a.degree_ == *b.degree_) out.degree_ = a.degree_;
    return out;
}

ConeLaurentSeries mul_monomial(const ConeLaurentSeries& a, const ExpVec& e,
                               const AlgebraElement& c) {
    if (static_cast<int>(e.size()) != a.vars_)
        throw std::invalid_argument("mul_monomial: arity mismatch");
    const int r = a.vars_;
    // Translate in s-coordinates; shifted coordinates (and so the caps) are
    // unchanged because the shift absorbs the translation.
    std::vector<int> lo(r), hi(r), caps(a.window_.pscap), shift(r);
    for (int i = 0; i < r; ++i) {
        lo[i] = clamp_bound(static_cast<long long>(a.window_.lower[i]) + e[i]);
        hi[i] = clamp_bound(static_cast<long long>(a.window_.upper[i]) + e[i]);
        shift[i] = a.shift_[i] - e[i];
    }
    ConeLaurentSeries out(a.ctx_, r, Window(r, std::move(lo), std::move(hi), std::move(caps)));
    out.shift_ = std::move(shift);
    for (int i = 0; i < r; ++i) out.active_[i] = a.active_[i] || e[i] != 0;
    ExpVec key(static_cast<std::size_t>(r), 0);
    for (const auto& [s, v] : a.terms_) {
        for (int i = 0; i < r; ++i) key[i] = s[i] + e[i];
        AlgebraElement w = v * c;
        if (!w.is_zero()) out.terms_.emplace(key, std::move(w));
    }
    int total = 0;
    for (int x : e) total += x;
    if (a.degree_ && c.homogeneous_degree())
        out.degree_ = *a.degree_ + *c.homogeneous_degree() + total;
    return out;
}

ConeLaurentSeries mul(const ConeLaurentSeries& a, const ConeLaurentSeries& b,
                      const Window* target) {
    if (a.vars_ != b.vars_ || !a.ctx_ || !b.ctx_ ||
        (a.ctx_ != b.ctx_ && !a.ctx_->same_as(*b.ctx_)))
        throw std::invalid_argument("laurent mul: incompatible series");
    const int r = a.vars_;

    // Single-term operands are exact translations.
    if (b.terms_.size() <= 1 && looks_entire(b)) {
        if (b.terms_.empty()) return ConeLaurentSeries::zero(a.ctx_, r, Window::unbounded(r));
        const auto& [e, c] = *b.terms_.begin();
        ConeLaurentSeries out = mul_monomial(a, e, c);
        if (a.degree_ && b.degree_) out.degree_ = *a.degree_ + *b.degree_;
        return out;
    }
    if (a.terms_.size() <= 1 && looks_entire(a)) return mul(b, a, target);

    const bool a_entire = looks_entire(a);
    const bool b_entire = looks_entire(b);

    std::vector<int> shift(r);
    for (int i = 0; i < r; ++i) shift[i] = a.shift_[i] + b.shift_[i];

    // Exactness caps of the product, from the inputs' knowledge regions: a
    // coefficient at shifted exponent U is exact when every cone decomposition
    // V + W = U has V known in a and W known in b.
    std::vector<long long> caps(r, kUnbounded);
    auto constrain = [&](const ConeLaurentSeries& x) {
        if (looks_entire(x)) return;
        std::vector<long long> psx(r);
        partial_sums(x.shift_, psx);
        int prev = -1;  // previous active position
        for (int i = 0; i < r; ++i) {
            caps[i] = std::min(caps[i], static_cast<long long>(x.window_.pscap[i]));
            if (!x.active_[i]) continue;
            long long hi_v = static_cast<long long>(x.window_.upper[i]) + x.shift_[i];
            long long lo_v = static_cast<long long>(x.window_.lower[i]) + x.shift_[i];
            caps[i] = std::min(caps[i], hi_v);
            if (prev >= 0)
                caps[prev] = std::min(caps[prev], -lo_v);
            else if (lo_v > 0)
                caps.assign(static_cast<std::size_t>(r), -1);  // nothing provable
            prev = i;
        }
    };
    constrain(a);
    constrain(b);
    if (target)
        for (int i = 0; i < r; ++i)
            caps[i] = std::min(caps[i], static_cast<long long>(target->pscap[i]));

    std::vector<int> lo(r), hi(r), icaps(r);
    for (int i = 0; i < r; ++i) {
        long long p = caps[i];
        long long pprev = i > 0 ? caps[i - 1] : 0;
        long long l = -pprev - shift[i];
        long long h = p - shift[i];
        if (target) {
            l = std::max<long long>(l, target->lower[i]);
            h = std::min<long long>(h, target->upper[i]);
        }
        if (l > h) l = h;
        lo[i] = clamp_bound(l);
        hi[i] = clamp_bound(h);
        icaps[i] = clamp_bound(p);
    }

    Window w = (a_entire && b_entire && !target)
                   ? Window::unbounded(r)
                   : Window(r, std::move(lo), std::move(hi), std::move(icaps));
    ConeLaurentSeries out(a.ctx_, r, std::move(w));
    out.shift_ = std::move(shift);

    const bool scalar_ctx = a.ctx_->generator_count() == 0;
    ExpVec key(static_cast<std::size_t>(r), 0);
    if (scalar_ctx) {
        std::map<ExpVec, BetaPoly> acc;
        for (const auto& [sa, ca] : a.terms_) {
            const BetaPoly pa = ca.constant_part();
            for (const auto& [sb, cb] : b.terms_) {
                for (int i = 0; i < r; ++i) key[i] = sa[i] + sb[i];
                if (!out.storable_at(key)) continue;
                BetaPoly prod = pa * cb.constant_part();
                if (prod.is_zero()) continue;
                auto [it, inserted] = acc.try_emplace(key, std::move(prod));
                if (!inserted) {
                    it->second += prod;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        for (auto& [s, c] : acc) {
            if (c.is_zero()) continue;
            for (int i = 0; i < r; ++i)
                if (s[i] != 0) out.active_[i] = true;
            out.terms_.emplace(s, AlgebraElement::scalar(a.ctx_, c));
        }
    } else {
        for (const auto& [sa, ca] : a.terms_)
            for (const auto& [sb, cb] : b.terms_) {
                for (int i = 0; i < r; ++i) key[i] = sa[i] + sb[i];
                if (!out.storable_at(key)) continue;
                out.add_term(key, ca * cb);
            }
    }
    if (a.degree_ && b.degree_) out.degree_ = *a.degree_ + *b.degree_;
    return out;
}

ConeLaurentSeries laurent_arith(const ConeLaurentSeries& a, const ConeLaurentSeries& b,
                                ArithKind kind) {
    return kind == ArithKind::add ? add(a, b) : mul(a, b);
}

// --- builders --------------------------------------------------------------

ConeLaurentSeries power_one_plus_beta_t(ContextPtr ctx, int vars, int i, int p,
                                        const Window& w) {
    if (i < 1 || i > vars) throw std::invalid_argument("power_one_plus_beta_t: bad index");
    const int pos = i - 1;
    if (p >= 0) {
        ConeLaurentSeries s(ctx, vars, Window::unbounded(vars));
        ExpVec e(static_cast<std::size_t>(vars), 0);
        for (int c = 0; c <= p; ++c) {
            e[pos] = c;
            s.add_term(e, BetaPoly::beta_power(c, Rational(binomial(p, c))));
        }
        s.set_degree(0);
        return s;
    }
    const long long cap = std::min<long long>(w.upper[pos], w.pscap[pos]);
    if (cap >= (1 << 20))
        throw std::invalid_argument("power_one_plus_beta_t: window unbounded in t_i");
    std::vector<int> lo(vars, -kUnbounded), hi(vars, kUnbounded), caps(vars, kUnbounded);
    lo[pos] = 0;
    hi[pos] = clamp_bound(cap);
    ConeLaurentSeries s(ctx, vars, Window(vars, std::move(lo), std::move(hi), std::move(caps)));
    ExpVec e(static_cast<std::size_t>(vars), 0);
    const int q = -p;
    for (long long c = 0; c <= cap; ++c) {
        e[pos] = static_cast<int>(c);
        Rational v(binomial(q - 1 + c, c));
        if (c % 2) v = -v;
        s.add_term(e, BetaPoly::beta_power(static_cast<int>(c), v));
    }
    s.set_degree(0);
    return s;
}

ConeLaurentSeries expand_inv_two_plus_beta_t(ContextPtr ctx, int vars, int i, const Window& w) {
    if (i < 1 || i > vars) throw std::invalid_argument("expand_inv_two_plus_beta_t: bad index");
    const int pos = i - 1;
    const long long cap = std::min<long long>(w.upper[pos], w.pscap[pos]);
    if (cap >= (1 << 20))
        throw std::invalid_argument("expand_inv_two_plus_beta_t: window unbounded in t_i");
    std::vector<int> lo(vars, -kUnbounded), hi(vars, kUnbounded), caps(vars, kUnbounded);
    lo[pos] = 0;
    hi[pos] = clamp_bound(cap);
    ConeLaurentSeries s(ctx, vars, Window(vars, std::move(lo), std::move(hi), std::move(caps)));
    ExpVec e(static_cast<std::size_t>(vars), 0);
    Rational c(1, 2);
    for (long long k = 0; k <= cap; ++k) {
        e[pos] = static_cast<int>(k);
        s.add_term(e, BetaPoly::beta_power(static_cast<int>(k), c));
        c /= -2;
    }
    s.set_degree(0);
    return s;
}

ConeLaurentSeries expand_inv_two_plus_beta_t(int i, const Window& w) {
    return expand_inv_two_plus_beta_t(make_scalar_context(), w.vars, i, w);
}

ConeLaurentSeries series_inverse_unit(const ConeLaurentSeries& s, const Window& target) {
    ExpVec origin(static_cast<std::size_t>(s.vars()), 0);
    AlgebraElement c0 = s.coeff_at(origin);
    if (!(c0 == AlgebraElement::one(s.context())))
        throw std::domain_error("series_inverse_unit: constant term must be 1");
    ConeLaurentSeries g = s;  // g = s - 1
    {
        ConeLaurentSeries minus_one =
            ConeLaurentSeries::monomial(s.context(), s.vars(), origin,
                                        -AlgebraElement::one(s.context()));
        g = add(g, minus_one);
    }
    // Iterate on the caps-derived region: a narrow requested box must not cut
    // into intermediate coefficients that in-box coefficients depend on.
    const Window inner = Window::from_caps(target.pscap);
    ConeLaurentSeries x = ConeLaurentSeries::one(s.context(), s.vars());
    const ConeLaurentSeries one = x;
    long long budget = 2;
    for (int i = 0; i < target.vars; ++i) budget += std::min<long long>(target.pscap[i], 1 << 20);
    for (long long it = 0; it <= budget; ++it) {
        ConeLaurentSeries next = add(one, -mul(g, x, &inner));
        if (next.terms() == x.terms()) return next;
        x = std::move(next);
    }
    throw std::runtime_error("series_inverse_unit: no fixed point inside the window");
}

ConeLaurentSeries expand_pair_product_factor(ContextPtr ctx, int vars, int i, int j,
                                             const Window& w) {
    if (!(1 <= i && i < j && j <= vars))
        throw std::invalid_argument("expand_pair_product_factor: need 1 <= i < j <= r");
    const auto one = AlgebraElement::one(ctx);
    const auto beta = BetaPoly::beta_power(1);
    ExpVec ratio(static_cast<std::size_t>(vars), 0);
    ratio[i - 1] = 1;
    ratio[j - 1] = -1;

    // tbar_i/tbar_j = (t_i/t_j)(1+beta t_j)/(1+beta t_i)
    ConeLaurentSeries poly_j = ConeLaurentSeries::one(ctx, vars);
    {
        ExpVec e(static_cast<std::size_t>(vars), 0);
        e[j - 1] = 1;
        poly_j = add(poly_j, ConeLaurentSeries::monomial(ctx, vars, e, beta));
    }
    ConeLaurentSeries inv_i = power_one_plus_beta_t(ctx, vars, i, -1, w);
    ConeLaurentSeries num =
        add(ConeLaurentSeries::one(ctx, vars), -mul_monomial(mul(poly_j, inv_i), ratio, one));

    // 1 - t_i/tbar_j = 1 + (t_i/t_j)(1+beta t_j): a finite polynomial.
    ConeLaurentSeries den = add(ConeLaurentSeries::one(ctx, vars),
                                mul_monomial(poly_j, ratio, one));
    ConeLaurentSeries out = mul(num, series_inverse_unit(den, w), &w);
    out.set_degree(0);
    return out;
}

ConeLaurentSeries expand_pair_product_factor(int i, int j, const Window& w) {
    return expand_pair_product_factor(make_scalar_context(), w.vars, i, j, w);
}

ConeLaurentSeries expand_pfaffian_entry_factor(ContextPtr ctx, int vars, int i, int j,
                                               int half_size, const Window& w) {
    const int m2 = 2 * half_size;
    if (!(1 <= i && i < j && j <= m2))
        throw std::invalid_argument("expand_pfaffian_entry_factor: need 1 <= i < j <= 2m");
    if (j > vars) throw std::invalid_argument("expand_pfaffian_entry_factor: index beyond arity");
    // (1 + beta tbar_k) = (1 + beta t_k)^{-1}
    ConeLaurentSeries lhs = power_one_plus_beta_t(ctx, vars, i, -(m2 - i - 1), w);
    ConeLaurentSeries rhs = power_one_plus_beta_t(ctx, vars, j, -(m2 - j), w);
    ConeLaurentSeries out =
        mul(mul(lhs, rhs, &w), expand_pair_product_factor(ctx, vars, i, j, w), &w);
    out.set_degree(0);
    return out;
}

ConeLaurentSeries expand_pfaffian_entry_factor(int i, int j, int half_size, const Window& w) {
    return expand_pfaffian_entry_factor(make_scalar_context(), w.vars, i, j, half_size, w);
}

bool window_stability_check(const SeriesBuilder& builder, const Window& w) {
    ConeLaurentSeries base = builder(w);
    ConeLaurentSeries wide = builder(w.doubled());
    return series_equal_on_claimed(base, wide);
}

bool series_equal_on_claimed(const ConeLaurentSeries& a, const ConeLaurentSeries& b,
                             int box_radius) {
    auto inside = [&](const ExpVec& s) {
        if (box_radius < 0) return true;
        for (int e : s)
            if (e < -box_radius || e > box_radius) return false;
        return true;
    };
    auto check = [&](const ConeLaurentSeries& x, const ConeLaurentSeries& y) {
        for (const auto& [s, c] : x.terms()) {
            if (!inside(s)) continue;
            if (!x.is_exact_at(s) || !y.is_exact_at(s)) continue;
            if (!(y.coeff_at(s) == c)) return false;
        }
        return true;
    };
    return check(a, b) && check(b, a);
}

}  // namespace ckgrass
