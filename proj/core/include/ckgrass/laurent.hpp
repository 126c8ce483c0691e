#pragma once

// Finitely-windowed Laurent series in t_1..t_r over a truncated algebra,
// supported (after a shift) in the cone C = {s_1 >= 0, s_1+s_2 >= 0, ...,
// s_1+...+s_r >= 0}. Products of such series are well defined because every
// coefficient of a product receives finitely many contributions.
//
// Exactness bookkeeping: a hypercube window alone cannot describe where a
// product of cone-supported series is exact, so a Window carries, next to the
// spec'd per-variable bounds, partial-sum caps pscap_i: the series claims its
// coefficient at s is exact whenever lower <= s <= upper and the shifted
// exponent U = shift + s satisfies 0 <= ps_i(U) <= pscap_i for every i.
// Multiplication derives the caps of the result from those of its inputs;
// coefficients outside the claimed region are unknown and asking for them
// throws.

#include "ckgrass/algebra.hpp"

#include <boost/container/small_vector.hpp>

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace ckgrass {

// Large-but-safe stand-in for an unconstrained bound.
inline constexpr int kUnbounded = 1 << 26;

struct Window {
    int vars = 0;
    std::vector<int> lower, upper;  // per-variable exponent bounds
    std::vector<int> pscap;         // partial-sum exactness caps (shifted coords)

    Window() = default;
    Window(int r, std::vector<int> lo, std::vector<int> hi);
    Window(int r, std::vector<int> lo, std::vector<int> hi, std::vector<int> caps);

    // [-radius, radius]^r with pscap_i = i*radius.
    static Window uniform(int r, int radius);
    // Region {s in C : ps_i(s) <= caps_i}; box is implied by the caps.
    static Window from_caps(std::vector<int> caps);
    // Everything unconstrained (finite exact polynomials).
    static Window unbounded(int r);

    Window doubled() const;
    bool contains_box(const std::vector<int>& s) const;
};

using ExpVec = boost::container::small_vector<int, 8>;

class ConeLaurentSeries {
public:
    using TermMap = std::map<ExpVec, AlgebraElement>;

    ConeLaurentSeries() = default;
    ConeLaurentSeries(ContextPtr ctx, int vars, Window window);

    static ConeLaurentSeries zero(ContextPtr ctx, int vars, Window w);
    static ConeLaurentSeries one(ContextPtr ctx, int vars);
    // Single term c * t^exps; exact everywhere.
    static ConeLaurentSeries monomial(ContextPtr ctx, int vars, const ExpVec& exps,
                                      const AlgebraElement& c);
    static ConeLaurentSeries monomial(ContextPtr ctx, int vars, const ExpVec& exps,
                                      const BetaPoly& c);

    const ContextPtr& context() const { return ctx_; }
    int vars() const { return vars_; }
    const std::vector<int>& shift() const { return shift_; }
    const Window& window() const { return window_; }
    const std::vector<bool>& active() const { return active_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    std::optional<int> degree() const { return degree_; }
    void set_degree(std::optional<int> d) { degree_ = d; }

    bool is_exact_at(const ExpVec& s) const;
    // Stored coefficient, or zero if the region proves it zero; throws
    // std::out_of_range outside the exactness region.
    AlgebraElement coeff_at(const ExpVec& s) const;
    BetaPoly scalar_coeff_at(const ExpVec& s) const;

    // Inserts c*t^s; throws if shift+s leaves the cone (hard error by design)
    // or falls outside the storable region.
    void add_term(const ExpVec& s, const AlgebraElement& c);
    void add_term(const ExpVec& s, const BetaPoly& c);

    ConeLaurentSeries operator-() const;
    ConeLaurentSeries scaled(const BetaPoly& c) const;
    ConeLaurentSeries specialized_at(const Rational& beta_value) const;

    // Grading check: coefficient of t^s homogeneous of degree d - |s|.
    bool check_degree(int d) const;

    std::string to_string() const;

    friend ConeLaurentSeries add(const ConeLaurentSeries& a, const ConeLaurentSeries& b);
    friend ConeLaurentSeries mul(const ConeLaurentSeries& a, const ConeLaurentSeries& b,
                                 const Window* target);
    friend ConeLaurentSeries mul_monomial(const ConeLaurentSeries& a, const ExpVec& e,
                                          const AlgebraElement& c);

private:
    bool storable_at(const ExpVec& s) const;
    ContextPtr ctx_;
    int vars_ = 0;
    std::vector<int> shift_;
    Window window_;
    std::vector<bool> active_;
    TermMap terms_;
    std::optional<int> degree_;
};

ConeLaurentSeries add(const ConeLaurentSeries& a, const ConeLaurentSeries& b);
ConeLaurentSeries mul(const ConeLaurentSeries& a, const ConeLaurentSeries& b,
                      const Window* target = nullptr);
ConeLaurentSeries mul_monomial(const ConeLaurentSeries& a, const ExpVec& e,
                               const AlgebraElement& c);

// Spec-level entry point.
ConeLaurentSeries laurent_arith(const ConeLaurentSeries& a, const ConeLaurentSeries& b,
                                ArithKind kind);

// --- expansions of the specific rational factors -------------------------

// (1 + beta*t_i)^p for any integer p (negative p expands as a power series).
ConeLaurentSeries power_one_plus_beta_t(ContextPtr ctx, int vars, int i, int p,
                                        const Window& w);

// sum_{k>=0} (1/2)(-beta/2)^k t_i^k, i.e. 1/(2+beta*t_i).
ConeLaurentSeries expand_inv_two_plus_beta_t(ContextPtr ctx, int vars, int i, const Window& w);
ConeLaurentSeries expand_inv_two_plus_beta_t(int i, const Window& w);

// Cone expansion of (1 - tbar_i/tbar_j)/(1 - t_i/tbar_j); support has
// s_i >= 0, s_i + s_j >= 0 and no positive powers of t_j.
ConeLaurentSeries expand_pair_product_factor(ContextPtr ctx, int vars, int i, int j,
                                             const Window& w);
ConeLaurentSeries expand_pair_product_factor(int i, int j, const Window& w);

// (1+beta*tbar_i)^{2m-i-1} (1+beta*tbar_j)^{2m-j} (1-tbar_i/tbar_j)/(1-t_i/tbar_j),
// the generating series of the gamma coefficients (1 <= i < j <= 2m).
ConeLaurentSeries expand_pfaffian_entry_factor(ContextPtr ctx, int vars, int i, int j,
                                               int half_size, const Window& w);
ConeLaurentSeries expand_pfaffian_entry_factor(int i, int j, int half_size, const Window& w);

// Inverse of a series with constant term 1 (geometric/fixed-point iteration
// inside the window).
ConeLaurentSeries series_inverse_unit(const ConeLaurentSeries& s, const Window& target);

// True iff rebuilding with a doubled window leaves every coefficient claimed
// by the original window unchanged.
using SeriesBuilder = std::function<ConeLaurentSeries(const Window&)>;
bool window_stability_check(const SeriesBuilder& builder, const Window& w);

// Coefficientwise comparison of the two series on the region both claim
// (restricted to |s_k| <= box_radius when radius >= 0).
bool series_equal_on_claimed(const ConeLaurentSeries& a, const ConeLaurentSeries& b,
                             int box_radius = -1);

}  // namespace ckgrass
