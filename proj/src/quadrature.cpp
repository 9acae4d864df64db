#include "ramv/quadrature.hpp"

#include <cmath>

#include "ramv/precision.hpp"

namespace ramv {

namespace {

struct Node {
    BigFloat x;
    BigFloat omx; // 1 - x, computed without cancellation
    BigFloat w;
};

// Abscissa/weight at t = j*h for the map x = (1 + tanh((pi/2) sinh t))/2.
// With u = exp(-2|y|), y = (pi/2) sinh t:  x = 1/(1+u), 1-x = u/(1+u) for t >= 0,
// and the pair swaps for t < 0.  Weight: dx/dt = pi cosh(t) u/(1+u)^2.
Node node_at(const BigFloat& t, mpfr_prec_t bits) {
    BigFloat pi = BigFloat::pi(bits);
    BigFloat y = (pi / 2L) * sinh(abs(t));
    BigFloat u = exp(BigFloat::from_long(-2, bits) * y);
    BigFloat onepu = u + 1L;
    Node n;
    BigFloat hi = BigFloat::from_long(1, bits) / onepu;
    BigFloat lo = u / onepu;
    if (t.sign() >= 0) {
        n.x = hi;
        n.omx = lo;
    } else {
        n.x = lo;
        n.omx = hi;
    }
    n.w = pi * cosh(t) * u / (onepu * onepu);
    return n;
}

} // namespace

BigComplex integrate01(const std::function<BigComplex(const BigFloat&, const BigFloat&)>& f,
                       mpfr_prec_t bits, int digits, BigFloat* err_out) {
    // Work a little above the caller's precision; the level-to-level difference
    // is the error estimate, so the node budget must outrun the target.
    mpfr_prec_t wb = bits + 24;
    // The map reaches within 10^-(digits+10) of the endpoints once
    // (pi/2) sinh(t_max) exceeds (digits+10) ln 10.
    double smax = (digits + 10) * 2.302585 * 2.0 / 3.141592653589793;
    double tmax_d = std::log(smax + std::sqrt(smax * smax + 1.0));

    BigFloat eps = tenpow(-(digits + 2), wb);

    BigComplex total(BigFloat::from_long(0, wb), BigFloat::from_long(0, wb));
    BigComplex prev = total;
    BigFloat diff = BigFloat::from_long(1, wb);
    bool have_prev = false;

    const int level_min = 3;
    const int level_max = 11;
    for (int level = level_min; level <= level_max; ++level) {
        double h_d = std::pow(2.0, -level);
        BigFloat h = BigFloat::from_long(1, wb) / BigFloat::from_long(1L << level, wb);
        long jmax = static_cast<long>(tmax_d / h_d) + 1;

        BigComplex acc(BigFloat::from_long(0, wb), BigFloat::from_long(0, wb));
        if (level == level_min) {
            for (long j = -jmax; j <= jmax; ++j) {
                Node n = node_at(h * j, wb);
                acc = acc + f(n.x, n.omx) * n.w;
            }
            total = acc * h;
        } else {
            // Refinement reuses the coarser grid: only odd multiples of h are new.
            long jstart = -jmax;
            if ((jstart & 1L) == 0) jstart += 1;
            for (long j = jstart; j <= jmax; j += 2) {
                Node n = node_at(h * j, wb);
                acc = acc + f(n.x, n.omx) * n.w;
            }
            total = prev / 2L + acc * h;
        }
        if (have_prev) {
            diff = abs(total - prev);
            if (diff <= eps * (abs(total) + 1L)) {
                prev = total;
                break;
            }
        }
        prev = total;
        have_prev = true;
    }
    if (err_out) *err_out = diff;
    return total.to_prec(bits);
}

} // namespace ramv
