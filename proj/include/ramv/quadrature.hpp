#pragma once

#include <functional>

#include "ramv/bigcomplex.hpp"

namespace ramv {

// Deterministic tanh-sinh quadrature over (0,1).  The integrand receives both
// x and 1-x so endpoint-singular factors can be evaluated without cancellation.
// Integrable endpoint singularities are fine; the node schedule is fixed by the
// digit budget, so equal inputs give bit-identical results.
BigComplex integrate01(const std::function<BigComplex(const BigFloat&, const BigFloat&)>& f,
                       mpfr_prec_t bits, int digits, BigFloat* err_out = nullptr);

} // namespace ramv
