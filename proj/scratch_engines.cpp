#include <cstdio>

#include "ramv/bernoulli.hpp"
#include "ramv/quadrature.hpp"
#include "ramv/series.hpp"

using namespace ramv;

static void show(const char* name, const SeriesResult& r, const BigComplex& want) {
    BigFloat err = abs(r.value - want);
    std::printf("%-28s conv=%d terms=%6ld est=%9.2e err=%9.2e strat=%s\n", name, r.converged ? 1 : 0,
                r.terms_used, r.tail_estimate.to_double(), err.to_double(), r.strategy.c_str());
}

int main() {
    PrecisionContext ctx;
    mpfr_prec_t wb = ctx.working_bits();
    BigFloat pi = BigFloat::pi(wb);

    std::printf("working digits = %d, bits = %ld\n", ctx.working_digits(), (long)wb);
    std::printf("B12 = %s (want -691/2730)\n", bernoulli(12).to_string().c_str());

    // zeta(2) = pi^2/6
    BigComplex zeta2(pi * pi / 6L);
    // ln 2
    BigFloat ln2 = log(BigFloat::from_long(2, wb));

    // direct: sum 1/2^n
    {
        auto t = [&](long n) { return BigComplex(1L / pow_si(BigFloat::from_long(2, wb), n)); };
        show("direct geom", sum_direct(t, 1, ctx), BigComplex(BigFloat::from_long(1, wb)));
    }
    // cvz: sum (-1)^(k-1)/k = ln 2
    {
        auto t = [&](long k) {
            BigComplex v(1L / BigFloat::from_long(k, wb));
            return (k % 2 == 0) ? -v : v;
        };
        show("cvz ln2", sum_cvz(t, 1, ctx), BigComplex(ln2));
    }
    // hurwitz_tail: zeta(2) - sum_{k<100} k^-2
    {
        BigFloat head = BigFloat::from_long(0, wb);
        for (long k = 1; k < 100; ++k) head += 1L / (BigFloat::from_long(k, wb) * k);
        BigFloat tail = hurwitz_tail(BigFloat::from_long(2, wb), 100, wb);
        BigFloat err = abs(head + tail - zeta2.re());
        std::printf("%-28s err=%9.2e\n", "hurwitz zeta2", err.to_double());
    }
    // em_taylor: sum 1/n^2
    {
        auto gen = [](mpfr_prec_t bits) {
            return [bits](const auto& n) { return 1L / (n * n); };
        };
        auto f = make_structured(gen, wb, wb + 1200);
        show("em_taylor zeta2", sum_em_taylor(f, 1, ctx), zeta2);
    }
    // em_fit: sum 1/n^2 (elevating)
    {
        auto gen = [](mpfr_prec_t bits) {
            return [bits](const auto& n) { return 1L / (n * n); };
        };
        auto f = make_structured(gen, wb, wb + 1200);
        show("em_fit zeta2", sum_em_fit(f.at_prec, 1, ctx), zeta2);
    }
    // em_fit with half-integer decay: sum n^{-5/2} vs hurwitz
    {
        auto f = [](long n, mpfr_prec_t b) {
            BigFloat s = BigRational(5, 2).to_bigfloat(b);
            return BigComplex(pow(BigFloat::from_long(n, b), -s));
        };
        BigFloat want = hurwitz_tail(BigRational(5, 2).to_bigfloat(wb + 64), 1, wb + 64);
        show("em_fit n^-2.5", sum_em_fit(f, 1, ctx), BigComplex(want.to_prec(wb)));
    }
    // abel z=-1: sum (-1)^k/k = -ln 2  (f(k)=1/k, z=-1)
    {
        auto f = [](long k, mpfr_prec_t b) { return BigComplex(1L / BigFloat::from_long(k, b)); };
        show("abel alt harmonic", sum_oscillatory(f, BigComplex::from_long(-1, wb), 1, ctx),
             BigComplex(-ln2));
    }
    // abel generic phase: sum cos(k*phi)/k^2 = pi^2/6 - pi*phi/2 + phi^2/4, phi=2
    {
        mpfr_prec_t hp = wb + 1400;
        BigFloat phi = BigFloat::from_long(2, hp);
        BigComplex z = exp(BigComplex(BigFloat::from_long(0, hp), phi));
        auto f = [](long k, mpfr_prec_t b) {
            return BigComplex(1L / (BigFloat::from_long(k, b) * k));
        };
        SeriesResult r = sum_oscillatory(f, z, 1, ctx);
        BigFloat phiw = phi.to_prec(wb);
        BigFloat want = pi * pi / 6L - pi * phiw / 2L + phiw * phiw / 4L;
        // sum e^{ik phi}/k^2: real part is the cosine series
        BigFloat err = abs(r.value.re() - want);
        std::printf("%-28s conv=%d terms=%6ld est=%9.2e err=%9.2e (re part)\n", "abel cos series",
                    r.converged ? 1 : 0, r.terms_used, r.tail_estimate.to_double(), err.to_double());
        // imaginary part: sum sin(k phi)/k^2 = Cl2(phi); just check residual vs direct-ish later
    }
    // auto: exponential
    {
        auto gen = [](mpfr_prec_t bits) {
            return [bits](const auto& n) { return 1L / (exp(n) * 2L); };
        };
        auto f = make_structured(gen, wb, wb + 1200);
        DecayClass c;
        SeriesResult r = sum_auto(f, 1, ctx, &c);
        BigFloat e = exp(BigFloat::from_long(1, wb));
        BigComplex want(1L / (2L * (e - 1L)));
        show("auto exp", r, want);
        std::printf("   class=%s\n", decay_class_name(c));
    }
    // quadrature: int_0^1 1/sqrt(x) dx = 2
    {
        BigFloat qerr;
        BigComplex I = integrate01(
            [&](const BigFloat& x, const BigFloat&) { return BigComplex(1L / sqrt(x)); }, wb, 40,
            &qerr);
        std::printf("%-28s err=%9.2e est=%9.2e\n", "quad 1/sqrt(x)",
                    abs(I - BigComplex::from_long(2, wb)).to_double(), qerr.to_double());
    }
    return 0;
}
