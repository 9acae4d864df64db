#include <cmath>
#include <cstdio>

#include "eval_common.hpp"

using namespace ramv;
using namespace ramv::detail;

int main() {
    PrecisionContext ctx;
    EvalCtx ec(ctx);
    mpfr_prec_t wb = ec.wb;
    BigFloat pi = BigFloat::pi(wb);

    // p2b outer i2: xi=1, ai=1/4, theta_i=pi/5; factor j1: xj=1, thj=pi/3, aj=1/2
    BigComplex xi = BigComplex::from_long(1, wb);
    BigComplex ai = BigComplex(BigFloat::from_double(0.25, wb));
    BigComplex thi = BigComplex(pi / 5L);
    BigComplex aj = BigComplex(BigFloat::from_double(0.5, wb));
    BigComplex thj = BigComplex(pi / 3L);
    BigComplex t = BigComplex(BigFloat::from_double(1.0 / 7.0, wb));
    BigComplex d2 = ai * ai - aj * aj;
    BigComplex ci = ai * ai - t * t;

    FactorSpec f = sin_factor(xi, xi, thj, d2, ec);
    std::printf("factor clearance=%.3f pieces=%zu splittable=%d\n", f.clearance, f.pieces.size(),
                (int)f.splittable);

    auto term = [&](long n) {
        BigComplex s = sin(thi * (2 * n + 1));
        BigComplex w = n % 2 == 0 ? s : 0L - s;
        BigComplex m = BigComplex::from_long(2 * n + 1, wb);
        BigComplex R = 1L / (m * m + ci);
        return w * R * f.direct_at(n);
    };
    for (long base : {21L, 205L}) {
        std::printf("window at %ld:\n", base);
        for (long n = base; n < base + 24; ++n) {
            BigFloat a = abs(term(n));
            double d = a.to_double();
            double ell = (d > 0 && std::isfinite(d)) ? std::log10(d) : (double)a.mag10();
            std::printf("  n=%ld log10=%.4f\n", n, ell);
        }
    }
    for (long K : {5L, 6L, 7L})
        std::printf("probe_exponential(term, %ld) = %d\n", K, (int)probe_exponential(term, K));
    return 0;
}
// computed in a second pass below
