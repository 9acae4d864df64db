#include <cstdio>

#include "eval_common.hpp"

using namespace ramv;
using namespace ramv::detail;

int main() {
    PrecisionContext ctx;
    EvalCtx ec(ctx);
    mpfr_prec_t wb = ec.wb;
    BigFloat pi = BigFloat::pi(wb);

    BigComplex xi = BigComplex::from_long(1, wb);
    BigComplex xj = BigComplex::i_unit(wb);
    BigComplex th = BigComplex(pi);
    BigComplex d2 = BigComplex::from_long(1, wb);
    LatticeMap nat{1, 0};
    FactorSpec f = cos_factor(xi, xj, th, d2, nat, ec);
    const Piece& pc = f.pieces[0];

    BigComplex t = BigComplex(BigFloat::from_double(1.0 / 3.0, wb));
    BigComplex ci = BigComplex::from_long(1, wb) - t * t;
    auto rgen = [xi, ci](mpfr_prec_t bits) {
        BigComplex x2b = pow_si(xi.to_prec(bits), 2);
        BigComplex cb = ci.to_prec(bits);
        return [=](const auto& nu) { return 1L / (x2b * (nu * nu) + cb); };
    };
    SmoothFn R = erase_gen(rgen, ec.wb, ec.hb);

    BigComplex cw = BigComplex::from_long(-1, ec.wb);
    BigComplex ch = BigComplex::from_long(-1, ec.hb);

    StructuredTerm st;
    st.at = [&](long n) {
        BigComplex m = BigComplex::from_long(n, ec.wb);
        return cw * R.at_w(m) * pc.gen.at_w(m);
    };
    st.at_point = [&](const BigComplex& s) { return ch * R.at_hi(s) * pc.gen.at_hi(s); };
    st.expand = [&](const TaylorSeries& s) { return (R.expand(s) * pc.gen.expand(s)) * ch; };

    for (long n = 4; n <= 6; ++n) {
        BigComplex v = st.at(n);
        std::printf("at(%ld) = %s\n", n, v.re().to_string(8).c_str());
    }
    try {
        SeriesResult r = sum_em_taylor(st, 4, ctx, 4);
        std::printf("em: conv=%d div=%d terms=%ld strat=%s\n", (int)r.converged, (int)r.diverging,
                    r.terms_used, r.strategy.c_str());
        std::printf("value = %s + %s i\n", r.value.re().to_string(25).c_str(),
                    r.value.im().to_string(25).c_str());
        std::printf("tail = %s\n", r.tail_estimate.to_string(4).c_str());
    } catch (const std::exception& e) {
        std::printf("threw: %s\n", e.what());
    }
    return 0;
}
