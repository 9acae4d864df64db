#pragma once

#include <functional>
#include <string>

#include "ramv/bigcomplex.hpp"
#include "ramv/precision.hpp"
#include "ramv/taylor.hpp"

namespace ramv {

struct SeriesResult {
    BigComplex value;
    long terms_used = 0;
    BigFloat tail_estimate;
    bool converged = false;
    bool diverging = false; // sustained term growth was observed
    std::string strategy;
};

// Decay class of a series' terms; selects the residual tolerance used when an
// identity built on that series is verified.
enum class DecayClass { exponential, alternating_poly, monotone_poly };

BigFloat class_tolerance(DecayClass c, const PrecisionContext& ctx);
const char* decay_class_name(DecayClass c);

using TermFn = std::function<BigComplex(long)>;
// Same term, evaluable at a requested precision (constants rebuilt, not rounded
// up).  Required by the engines that difference or extrapolate term values.
using TermAtPrec = std::function<BigComplex(long, mpfr_prec_t)>;
using PointFn = std::function<BigComplex(const BigComplex&)>;
using ExpandFn = std::function<TaylorSeries(const TaylorSeries&)>;

// A term together with whatever analytic structure the caller can supply.
// `at` is mandatory; the optional members unlock the faster engines.
struct StructuredTerm {
    TermFn at;
    TermAtPrec at_prec; // may be empty
    PointFn at_point;   // may be empty; analytic continuation to real s
    ExpandFn expand;    // may be empty; Taylor expansion about an integer
};

// Black-box summation facade: direct, alternating acceleration, or tail fit,
// chosen by ctx.acceleration.  The term function runs at its own precision, so
// the tail-fit route cannot do better than roughly 1e-14; the structured
// engines below are not so limited.
SeriesResult sum_series(const TermFn& term, long n0, const PrecisionContext& ctx);

SeriesResult sum_direct(const TermFn& term, long n0, const PrecisionContext& ctx);

// Cohen-Rodriguez Villegas-Zagier acceleration for strictly alternating terms;
// the terms are passed with their signs.
SeriesResult sum_cvz(const TermFn& term, long n0, const PrecisionContext& ctx);

// Euler-Maclaurin with exact derivatives: a direct head, then
//   sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - sum_j B_{2j} t_{2j-1} / (2j),
// t_k the Taylor coefficients of f about N.  Needs at_point and expand, terms
// smoothly decaying like n^-p, p >= 2, singularities within O(1) of the origin.
SeriesResult sum_em_taylor(const StructuredTerm& f, long n0, const PrecisionContext& ctx,
                           long min_start = 0);

// Monotone power-law tail fit: a direct head, then the tail from a rational
// Lagrange extrapolation in 1/k against Hurwitz-zeta tails.  s0_hint, if
// positive, overrides the estimated leading decay exponent.
SeriesResult sum_em_fit(const TermAtPrec& f, long n0, const PrecisionContext& ctx,
                        double s0_hint = 0.0);

// sum_{k>=n0} z^k f(k) for |z| = 1, z != 1, f smooth and decaying: a direct
// head, then iterated Abel summation of the tail,
//   T(f; N) = A z^N sum_j B^j (Delta^j f)(N),  A = -1/(z-1), B = -z/(z-1),
// with the difference table built at elevated precision.  min_start pushes the
// tail start past any singularities of f near the real axis.
SeriesResult sum_oscillatory(const TermAtPrec& f, const BigComplex& z, long n0,
                             const PrecisionContext& ctx, long min_start = 0);

// Probes the first terms, classifies the decay, and routes to the best engine
// the structure allows.
SeriesResult sum_auto(const StructuredTerm& f, long n0, const PrecisionContext& ctx,
                      DecayClass* cls = nullptr);

// sum_{k>=from} k^-s for real s > 1, by Euler-Maclaurin with exact power-term
// derivatives.
BigFloat hurwitz_tail(const BigFloat& s, long from, mpfr_prec_t bits);

// Builds a StructuredTerm from a formula generator: gen(bits) must return a
// generic callable S -> S (S = BigComplex or TaylorSeries) whose captured
// constants live at the given precision.
template <class Gen>
StructuredTerm make_structured(Gen gen, mpfr_prec_t wbits, mpfr_prec_t hibits) {
    auto f_w = gen(wbits);
    auto f_hi = gen(hibits);
    StructuredTerm t;
    t.at = [f_w, wbits](long n) { return f_w(BigComplex::from_long(n, wbits)); };
    t.at_prec = [f_w, f_hi, wbits, hibits](long n, mpfr_prec_t b) {
        if (b <= wbits) return f_w(BigComplex::from_long(n, wbits)).to_prec(b);
        mpfr_prec_t use = b <= hibits ? b : hibits;
        return f_hi(BigComplex::from_long(n, use)).to_prec(use);
    };
    t.at_point = [f_w](const BigComplex& s) { return f_w(s); };
    t.expand = [f_w](const TaylorSeries& s) { return f_w(s); };
    return t;
}

} // namespace ramv
