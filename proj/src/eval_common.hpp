#pragma once

// Internal machinery shared by the identity evaluators.  The central object is
// the phase/smooth split: a sampled kernel factor is rewritten as a sum of
// pieces c * e^(i phi nu) * g(nu) with g smooth on [nu0, inf), so an outer
// series becomes a small set of runs for the structured engines (phase 0 to
// Euler-Maclaurin, anything else to Abel summation), with a direct-summation
// fast path whenever the probe sees exponential decay.

#include <functional>
#include <string>
#include <vector>

#include "ramv/identities.hpp"
#include "ramv/kernels.hpp"
#include "ramv/series.hpp"

namespace ramv {
namespace detail {

// One smooth formula, type-erased at the two precisions the engines need.
// `at_w` and `expand` carry constants at working precision, `at_hi` at the
// elevated precision used for difference tables.
struct SmoothFn {
    std::function<BigComplex(const BigComplex&)> at_w;
    std::function<BigComplex(const BigComplex&)> at_hi;
    std::function<TaylorSeries(const TaylorSeries&)> expand;
};

// gen(bits) must return a generic callable S -> S (S = BigComplex or
// TaylorSeries) whose captured constants live at the given precision.
template <class Gen>
SmoothFn erase_gen(Gen gen, mpfr_prec_t wb, mpfr_prec_t hb) {
    auto fw = gen(wb);
    auto fh = gen(hb);
    SmoothFn s;
    s.at_w = [fw](const BigComplex& z) { return fw(z); };
    s.at_hi = [fh](const BigComplex& z) { return fh(z); };
    s.expand = [fw](const TaylorSeries& t) { return fw(t); };
    return s;
}

// Per-evaluation constants.  wb is the working precision, hb the elevated
// precision handed to at_hi; snap is the structural zero threshold and
// phase_snap the tolerance for collapsing a reduced phase onto 0 or pi.
struct EvalCtx {
    const PrecisionContext* ctx;
    mpfr_prec_t wb;
    mpfr_prec_t hb;
    int wd;
    BigFloat snap;
    BigFloat phase_snap;

    explicit EvalCtx(const PrecisionContext& c);

    BigComplex cpx(long v) const { return BigComplex::from_long(v, wb); }
    BigComplex at_wb(const BigComplex& z) const { return z.to_prec(wb); }
    bool nearly_zero(const BigComplex& z) const { return abs(z) <= snap; }
    bool nearly_real(const BigComplex& z) const { return abs(z.im()) <= snap * (1 + abs(z)); }
};

// The index map nu -> m = mult * nu + off (naturals: {1, 0} from nu = 1; odd
// integers: {2, 1} from nu = 0).
struct LatticeMap {
    long mult = 1;
    long off = 0;
};

// c * e^(i phi nu) * g(nu); a piece without a gen is a pure phased constant.
// `tag` identifies the gen within its factor so duplicate-phase combinations
// can be merged.
struct Piece {
    BigComplex c_w, c_h;
    BigFloat ph_w, ph_h;
    SmoothFn gen;
    bool has_gen = false;
    int tag = -1;
};

// One multiplicative factor of an outer series term: a verbatim evaluator at
// lattice points for the probe/direct path, and (when `splittable`) the
// equivalent piece list for the structured path.
struct FactorSpec {
    std::function<BigComplex(long)> direct_at;
    std::vector<Piece> pieces;
    bool splittable = true;
    double clearance = 0.0;
};

// One outer sum: prefactor * sum_{nu >= nu0} weight(nu) R(nu) prod_j factor_j(nu).
struct OuterSpec {
    std::string label;
    BigComplex prefactor;
    std::vector<Piece> weight;
    std::function<BigComplex(long)> weight_at;
    SmoothFn R;
    std::vector<FactorSpec> factors;
    long nu0 = 0;
    long clearance = 2;
    bool vanishes = false;
};

// Reduce a real phase to (-pi, pi], snapping onto 0 and pi.
BigFloat reduce_phase(const BigFloat& w, mpfr_prec_t bits, const BigFloat& snap);

// True when the term magnitudes keep falling at a per-term rate that persists
// from the early window to the late one, i.e. genuine exponential decay rather
// than a power law.
bool probe_exponential(const std::function<BigComplex(long)>& term, long nu0);

struct Routed {
    SeriesResult res;
    DecayClass cls = DecayClass::monotone_poly;
};

// Engine routing for a black-box term: sharp exponential decay goes to direct
// summation, strictly alternating real terms to the acceleration, everything
// else to the power-law tail fit, which cross-validates its own extrapolation
// and reports failure honestly.
Routed route_series(const TermAtPrec& term, long n0, const PrecisionContext& ctx);

// Keeps `worst` at the weakest decay class seen so far.
void widen(DecayClass& worst, DecayClass c);

// Evaluates one outer sum, appending one SeriesStat per engine run, widening
// `worst` to the weakest decay class used, and clearing `ok` when a run fails
// to converge.  Throws NotConverged when no supported route exists.
BigComplex eval_outer(const OuterSpec& os, const EvalCtx& ec, std::vector<SeriesStat>& stats,
                      DecayClass& worst, bool& ok);

// Compiled kernel factors for the two flavors.  d2 = a_i^2 - a_j^2 at working
// precision; the returned spec samples s = sqrt(x_i^2 m^2 + d2) on the lattice.
FactorSpec cos_factor(const BigComplex& xi, const BigComplex& xj, const BigComplex& thj,
                      const BigComplex& d2, const LatticeMap& lm, const EvalCtx& ec);
FactorSpec sin_factor(const BigComplex& xi, const BigComplex& xj, const BigComplex& thj,
                      const BigComplex& d2, const EvalCtx& ec);

// A factor that is smooth for every admissible parameter choice: built from
// one generic formula plus its pole clearance radius.
template <class Gen>
FactorSpec smooth_factor(Gen gen, double clearance, const EvalCtx& ec) {
    FactorSpec f;
    SmoothFn s = erase_gen(gen, ec.wb, ec.hb);
    auto at = s.at_w;
    mpfr_prec_t wb = ec.wb;
    f.direct_at = [at, wb](long n) { return at(BigComplex::from_long(n, wb)); };
    Piece p;
    p.c_w = BigComplex::from_long(1, ec.wb);
    p.c_h = BigComplex::from_long(1, ec.hb);
    p.ph_w = BigFloat::from_long(0, ec.wb);
    p.ph_h = BigFloat::from_long(0, ec.hb);
    p.gen = s;
    p.has_gen = true;
    p.tag = 0;
    f.pieces.push_back(p);
    f.clearance = clearance;
    return f;
}

// Weight pieces for the two flavors.  cos: (-1)^(n-1) cos(n theta), n >= 1.
// sin: (-1)^n sin((2n+1) theta), n >= 0.  Both require real theta on the
// structured path; the verbatim weight handles any theta for the direct path.
std::vector<Piece> cos_weight_pieces(const BigComplex& theta, const EvalCtx& ec);
std::vector<Piece> sin_weight_pieces(const BigComplex& theta, const EvalCtx& ec);

// tau = sqrt(t^2 - a^2) guarded through the kernel limits: the closed cos
// kernel factor of the product side.
BigComplex closed_cos_factor(const BigComplex& t, const BigComplex& a, const BigComplex& x,
                             const BigComplex& theta, const PrecisionContext& ctx);
// Closed sin kernel ratio as printed: sin(theta tau / x) / (tau cos(pi tau / (2x))),
// with the tau = 0 limit theta / x.
BigComplex closed_sin_ratio(const BigComplex& t, const BigComplex& a, const BigComplex& x,
                            const BigComplex& theta, const PrecisionContext& ctx);

// Fills residuals, tolerance, pass, and working_digits from the evaluated
// sides and the weakest decay class seen.
void finish_report(VerificationReport& rep, const BigComplex& lhs, const BigComplex& rhs,
                   DecayClass worst, bool converged, const PrecisionContext& ctx);

// Pole clearance radius |nu| of x^2 m(nu)^2 + c = 0 under the given lattice.
double clearance_radius(const BigComplex& x, const BigComplex& c, const LatticeMap& lm);

} // namespace detail
} // namespace ramv
