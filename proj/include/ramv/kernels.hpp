#pragma once

#include "ramv/bigcomplex.hpp"
#include "ramv/precision.hpp"
#include "ramv/series.hpp"

namespace ramv {

// The two building-block kernels behind every expansion here, each in closed
// form and as its defining partial-fraction series:
//
//   cos kernel:  pi cos(theta x/y) / (2 x y sin(pi x/y)) - 1/(2 x^2)
//              = sum_{k>=1} (-1)^(k-1) cos(k theta) / (k^2 y^2 - x^2),  |theta| <= pi
//
//   sin kernel:  pi sin(theta x/y) / (4 x y cos(pi x/(2y)))
//              = sum_{n>=0} (-1)^n sin((2n+1) theta) / ((2n+1)^2 y^2 - x^2),  |theta| <= pi/2
//
// Both are even in x, so x enters only through x^2 and the principal square
// root is safe upstream.  x/y at a pole of the closed form (any nonzero
// integer for cos, odd integer for sin) raises PoleError; x = 0 in the cos
// closed form raises DomainError, with the finite series limit available as
// cos_kernel_limit_at_zero.  The sin closed form at x = 0 evaluates its limit
// pi theta / (4 y^2).

BigComplex cos_kernel_closed(const BigComplex& x, const BigComplex& y, const BigComplex& theta,
                             const PrecisionContext& ctx);
BigComplex sin_kernel_closed(const BigComplex& x, const BigComplex& y, const BigComplex& theta,
                             const PrecisionContext& ctx);

// Limit of the cos kernel series as x -> 0: (pi^2/12 - theta^2/4) / y^2.
BigComplex cos_kernel_limit_at_zero(const BigComplex& y, const BigComplex& theta,
                                    const PrecisionContext& ctx);

// Series evaluation by phase routing: the alternating-cosine weight is folded
// into e^{ikw} with w = theta+pi (cos) or 2 theta+pi (sin) reduced to
// (-pi, pi]; w = 0 goes to the Euler-Maclaurin tail, anything else to Abel
// summation.  Nonreal theta makes the terms grow and raises NotConverged.
SeriesResult cos_kernel_series(const BigComplex& x, const BigComplex& y, const BigComplex& theta,
                               const PrecisionContext& ctx);
SeriesResult sin_kernel_series(const BigComplex& x, const BigComplex& y, const BigComplex& theta,
                               const PrecisionContext& ctx);

} // namespace ramv
