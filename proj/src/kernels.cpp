#include "ramv/kernels.hpp"

#include <cmath>

#include "ramv/errors.hpp"

namespace ramv {

namespace {

// Nonzero integer within working tolerance of u (both parts), else 0.
long near_integer(const BigComplex& u, int wd) {
    double are = std::fabs(u.re().to_double());
    if (!(are < 1e12)) return 0;
    BigFloat rm = round_nearest(u.re());
    long m = rm.to_long();
    if (m == 0) return 0;
    BigFloat d = abs(u - BigComplex(rm));
    if (d <= tenpow(-(wd - 6), u.prec()) * (abs(u) + 1L)) return m;
    return 0;
}

// Elevation that absorbs the 1/x^2-level cancellation in the cos closed form.
mpfr_prec_t closed_form_bits(const BigComplex& x, const PrecisionContext& ctx) {
    long mag = abs(x).mag10();
    long extra = mag < 0 ? -2 * mag + 8 : 0;
    if (extra > 4000) throw DomainError("x too close to 0 for the closed form");
    return ctx.working_bits() + PrecisionContext::bits_for_digits(static_cast<int>(extra));
}

// Phase reduced to (-pi, pi] at high precision, with values within rounding
// distance of 0 snapped to exactly 0 so they route to the monotone engine.
BigFloat reduce_phase(const BigFloat& phi, int wd, mpfr_prec_t hp) {
    BigFloat twopi = 2L * BigFloat::pi(hp);
    BigFloat q = round_nearest(phi / twopi);
    BigFloat w = phi - q * twopi;
    if (abs(w) <= tenpow(-(wd - 5), hp)) w = BigFloat::from_long(0, hp);
    return w;
}

// Ceiling of the kernel's accelerated-engine elevation over every admissible
// start/depth, so the structured term's high-precision instance always covers
// the engine's internal demand.
mpfr_prec_t kernel_hp(const PrecisionContext& ctx) {
    long m = static_cast<long>(std::ceil(2.4 * (ctx.working_digits() + 5)));
    double lg = std::log2(static_cast<double>(ctx.max_terms_accelerated + m + 2));
    return ctx.working_bits() + static_cast<mpfr_prec_t>(m * lg) + 224;
}

long pole_clearance(const BigComplex& u, const PrecisionContext& ctx, double scale) {
    double au = abs(u).to_double() * scale;
    long c = static_cast<long>(std::ceil(au)) + 8;
    if (c + 64 > ctx.max_terms_accelerated)
        throw NotConverged("series pole clearance exceeds the accelerated-term budget");
    return c;
}

SeriesResult combine_two(const SeriesResult& r1, const SeriesResult& r2, const BigComplex& value,
                         mpfr_prec_t wb) {
    SeriesResult out;
    out.value = value.to_prec(wb);
    out.terms_used = r1.terms_used + r2.terms_used;
    out.tail_estimate = ((r1.tail_estimate + r2.tail_estimate) / 2L).to_prec(wb);
    out.converged = r1.converged && r2.converged;
    out.diverging = r1.diverging || r2.diverging;
    out.strategy = r1.strategy;
    return out;
}

} // namespace

BigComplex cos_kernel_closed(const BigComplex& x, const BigComplex& y, const BigComplex& theta,
                             const PrecisionContext& ctx) {
    if (y.is_zero()) throw DomainError("y must be nonzero");
    if (x.is_zero())
        throw DomainError("cos kernel closed form diverges at x = 0; use cos_kernel_limit_at_zero");
    int wd = ctx.working_digits();
    mpfr_prec_t wb = ctx.working_bits();
    BigComplex u = x.to_prec(wb) / y.to_prec(wb);
    if (long m = near_integer(u, wd); m != 0) throw PoleError("x/y at a nonzero integer");

    mpfr_prec_t eb = closed_form_bits(x, ctx);
    BigComplex xe = x.to_prec(eb), ye = y.to_prec(eb), th = theta.to_prec(eb);
    BigComplex ue = xe / ye;
    BigFloat pi = BigFloat::pi(eb);
    BigComplex t1 = cos(th * ue) * pi / (2L * xe * ye * sin(ue * pi));
    BigComplex t2 = 1L / (2L * xe * xe);
    return (t1 - t2).to_prec(wb);
}

BigComplex sin_kernel_closed(const BigComplex& x, const BigComplex& y, const BigComplex& theta,
                             const PrecisionContext& ctx) {
    if (y.is_zero()) throw DomainError("y must be nonzero");
    int wd = ctx.working_digits();
    mpfr_prec_t wb = ctx.working_bits();
    BigFloat pi = BigFloat::pi(wb);
    if (x.is_zero()) {
        // Limit of the ratio: pi theta / (4 y^2).
        BigComplex yw = y.to_prec(wb);
        return theta.to_prec(wb) * pi / (4L * yw * yw);
    }
    BigComplex u = x.to_prec(wb) / y.to_prec(wb);
    if (long m = near_integer(u, wd); m != 0 && (m & 1L) != 0)
        throw PoleError("x/y at an odd integer");
    BigComplex xe = x.to_prec(wb), ye = y.to_prec(wb), th = theta.to_prec(wb);
    return sin(th * u) * pi / (4L * xe * ye * cos(u * pi / 2L));
}

BigComplex cos_kernel_limit_at_zero(const BigComplex& y, const BigComplex& theta,
                                    const PrecisionContext& ctx) {
    if (y.is_zero()) throw DomainError("y must be nonzero");
    mpfr_prec_t wb = ctx.working_bits();
    BigFloat pi = BigFloat::pi(wb);
    BigComplex th = theta.to_prec(wb);
    BigComplex yw = y.to_prec(wb);
    return (BigComplex(pi * pi / 12L) - th * th / 4L) / (yw * yw);
}

SeriesResult cos_kernel_series(const BigComplex& x, const BigComplex& y, const BigComplex& theta,
                               const PrecisionContext& ctx) {
    if (y.is_zero()) throw DomainError("y must be nonzero");
    if (!theta.im().is_zero())
        throw NotConverged("cos kernel series terms grow for nonreal theta");
    int wd = ctx.working_digits();
    mpfr_prec_t wb = ctx.working_bits();
    BigComplex u = x.to_prec(wb) / y.to_prec(wb);
    if (long m = near_integer(u, wd); m != 0)
        throw PoleError("x/y at a nonzero integer is a pole of the series");
    long clearance = pole_clearance(u, ctx, 1.0);

    mpfr_prec_t hp = kernel_hp(ctx);
    // (-1)^(k-1) cos(k theta) = -cos(k (theta + pi)): phase w = theta + pi.
    BigFloat w = reduce_phase(theta.re().to_prec(hp) + BigFloat::pi(hp), wd, hp);

    auto gen = [&x, &y](mpfr_prec_t bits) {
        BigComplex x2 = pow_si(x.to_prec(bits), 2);
        BigComplex y2 = pow_si(y.to_prec(bits), 2);
        return [x2, y2](const auto& k) { return 1L / (k * k * y2 - x2); };
    };
    auto st = make_structured(gen, wb, hp);

    if (w.is_zero()) {
        SeriesResult r = sum_em_taylor(st, 1, ctx, clearance);
        r.value = -r.value;
        return r;
    }
    BigComplex z = exp(BigComplex(BigFloat::from_long(0, hp), w));
    SeriesResult r1 = sum_oscillatory(st.at_prec, z, 1, ctx, clearance);
    if (x.im().is_zero() && y.im().is_zero()) {
        // Real terms: S(-w) = conj S(w), so the sum is -Re S(w).
        SeriesResult out = r1;
        out.value = BigComplex(-r1.value.re());
        return out;
    }
    SeriesResult r2 = sum_oscillatory(st.at_prec, conj(z), 1, ctx, clearance);
    return combine_two(r1, r2, -(r1.value + r2.value) / 2L, wb);
}

SeriesResult sin_kernel_series(const BigComplex& x, const BigComplex& y, const BigComplex& theta,
                               const PrecisionContext& ctx) {
    if (y.is_zero()) throw DomainError("y must be nonzero");
    if (!theta.im().is_zero())
        throw NotConverged("sin kernel series terms grow for nonreal theta");
    int wd = ctx.working_digits();
    mpfr_prec_t wb = ctx.working_bits();
    BigComplex u = x.to_prec(wb) / y.to_prec(wb);
    if (long m = near_integer(u, wd); m != 0 && (m & 1L) != 0)
        throw PoleError("x/y at an odd integer is a pole of the series");
    long clearance = pole_clearance(u, ctx, 0.5);

    mpfr_prec_t hp = kernel_hp(ctx);
    // (-1)^n sin((2n+1) theta) = Im(e^{i theta} e^{in (2 theta + pi)}).
    BigFloat w = reduce_phase(2L * theta.re().to_prec(hp) + BigFloat::pi(hp), wd, hp);

    auto gen = [&x, &y](mpfr_prec_t bits) {
        BigComplex x2 = pow_si(x.to_prec(bits), 2);
        BigComplex y2 = pow_si(y.to_prec(bits), 2);
        return [x2, y2](const auto& n) {
            auto m = n * 2L + 1L;
            return 1L / (m * m * y2 - x2);
        };
    };
    auto st = make_structured(gen, wb, hp);

    if (w.is_zero()) {
        // sum = sin(theta) * sum_n h(n).
        SeriesResult r = sum_em_taylor(st, 0, ctx, clearance);
        r.value = (sin(theta.to_prec(wb)) * r.value).to_prec(wb);
        return r;
    }
    BigComplex z = exp(BigComplex(BigFloat::from_long(0, hp), w));
    BigComplex eit = exp(BigComplex(BigFloat::from_long(0, wb), theta.re().to_prec(wb)));
    SeriesResult r1 = sum_oscillatory(st.at_prec, z, 0, ctx, clearance);
    if (x.im().is_zero() && y.im().is_zero()) {
        SeriesResult out = r1;
        out.value = BigComplex((eit * r1.value).im());
        return out;
    }
    SeriesResult r2 = sum_oscillatory(st.at_prec, conj(z), 0, ctx, clearance);
    BigComplex half_i = BigComplex(BigFloat::from_long(0, wb), BigFloat::from_string("-0.5", wb));
    return combine_two(r1, r2, (eit * r1.value - conj(eit) * r2.value) * half_i, wb);
}

} // namespace ramv
