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
    std::printf("splittable=%d pieces=%zu clearance=%.3f\n", (int)f.splittable, f.pieces.size(),
                f.clearance);
    for (long m = 1; m <= 6; ++m) {
        BigComplex v = f.direct_at(m);
        std::printf("direct_at(%ld) = %s + %s i\n", m, v.re().to_string(8).c_str(),
                    v.im().to_string(8).c_str());
    }
    if (!f.pieces.empty()) {
        auto& p = f.pieces[0];
        for (long m = 4; m <= 8; ++m) {
            BigComplex v = p.gen.at_w(BigComplex::from_long(m, wb));
            std::printf("gen(%ld) = %s + %s i\n", m, v.re().to_string(8).c_str(),
                        v.im().to_string(8).c_str());
        }
        TaylorSeries s = TaylorSeries::variable(BigComplex::from_long(40, ec.hb), 8);
        TaylorSeries g = p.gen.expand(s);
        for (int k = 0; k < 4; ++k) {
            BigComplex c = g.coeff(k);
            std::printf("exp coeff[%d] = %s + %s i\n", k, c.re().to_string(8).c_str(),
                        c.im().to_string(8).c_str());
        }
    }
    return 0;
}
