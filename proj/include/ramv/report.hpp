#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ramv/bigcomplex.hpp"
#include "ramv/precision.hpp"
#include "ramv/series.hpp"

namespace ramv {

// Parameter bundle shared by every registry identity.  Vector lengths carry
// the family sizes: |thetas| = |xs| = |as_| = M and |betas| = |ys| = |bs| = N
// for the kernel-product identities (betas/ys/bs stay empty when there is no
// reciprocal family).  prop8 instead reads its power pair from the M, N
// fields with x1 = xs[0], x2 = xs[1]; eq4.15 reads its coefficient index
// from m.  w is the deformation parameter of the eta-type identities.
struct IdentityParams {
    std::vector<BigComplex> thetas;
    std::vector<BigComplex> betas;
    std::vector<BigComplex> xs;
    std::vector<BigComplex> ys;
    std::vector<BigComplex> as_;
    std::vector<BigComplex> bs;
    BigComplex t;
    BigComplex w;
    long m = 1;
    long M = 0;
    long N = 0;
};

// One failed hypothesis instance.  n and k are the witness indices of the
// resonance (or -1 when the condition is not indexed); i and j name the
// parameter pair that collided.
struct HypothesisViolation {
    std::string condition;
    long n = -1;
    long k = -1;
    long i = -1;
    long j = -1;
};

// ok is true exactly when violations is empty.  checked_up_to records the
// largest index the finite resonance scan covered; the tail beyond it is
// excluded by a growth argument, not by enumeration.  warnings carry
// non-fatal notes (conditional convergence at an endpoint theta, etc.).
struct HypothesisReport {
    bool ok = true;
    std::vector<HypothesisViolation> violations;
    long checked_up_to = 0;
    std::vector<std::string> warnings;
};

// Per-series accounting copied out of the summation engines so a report can
// show how each constituent sum was actually computed.
struct SeriesStat {
    std::string label;
    long terms_used = 0;
    std::string strategy;
    BigFloat tail_estimate;
    bool converged = false;
};

// Outcome of one identity evaluation.  rel_residual = abs_residual /
// max(1, |rhs|); pass requires hypothesis.ok and rel_residual < tolerance.
// elapsed_ms is wall-clock and is excluded from serialized reports so that
// repeated runs stay byte-identical.
struct VerificationReport {
    std::string identity_id;
    IdentityParams params;
    BigComplex lhs;
    BigComplex rhs;
    BigFloat abs_residual;
    BigFloat rel_residual;
    BigFloat tolerance;
    bool pass = false;
    HypothesisReport hypothesis;
    std::vector<SeriesStat> series_stats;
    int working_digits = 0;
    double elapsed_ms = 0.0;
};

// A function f(z) = sum_{n >= n0} residue(n) / (pole(n) - z) together with
// an independently computable closed form.  Registration-time consistency:
// the series truncated at the context's direct budget must agree with
// closed_form at a test point to the class tolerance.  decay_class describes
// the tail of residue(n)/pole(n) and selects the comparison tolerance.
struct FunctionExpansion {
    std::function<BigComplex(long, mpfr_prec_t)> residue;
    std::function<BigComplex(long, mpfr_prec_t)> pole;
    std::function<BigComplex(const BigComplex&, const PrecisionContext&)> closed_form;
    DecayClass decay_class = DecayClass::monotone_poly;
    long n0 = 1;
};

} // namespace ramv
