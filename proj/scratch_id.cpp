#include <cstdio>
#include <string>

#include "ramv/identities.hpp"

using namespace ramv;

static void show(const VerificationReport& r) {
    std::printf("== %s ==\n", r.identity_id.c_str());
    std::printf("  hyp ok=%d violations=%zu\n", (int)r.hypothesis.ok, r.hypothesis.violations.size());
    for (auto& v : r.hypothesis.violations)
        std::printf("    viol: %s (n=%ld k=%ld i=%ld j=%ld)\n", v.condition.c_str(), v.n, v.k, v.i, v.j);
    if (r.hypothesis.ok) {
        std::printf("  lhs = %s + %s i\n", r.lhs.re().to_string(20).c_str(), r.lhs.im().to_string(20).c_str());
        std::printf("  rhs = %s + %s i\n", r.rhs.re().to_string(20).c_str(), r.rhs.im().to_string(20).c_str());
        std::printf("  abs_res = %s  rel_res = %s  tol = %s  pass=%d\n",
                    r.abs_residual.to_string(6).c_str(), r.rel_residual.to_string(6).c_str(),
                    r.tolerance.to_string(6).c_str(), (int)r.pass);
    }
    for (auto& s : r.series_stats)
        std::printf("  stat %-14s strat=%-22s terms=%-7ld conv=%d tail=%s\n", s.label.c_str(),
                    s.strategy.c_str(), s.terms_used, (int)s.converged,
                    s.tail_estimate.to_string(4).c_str());
}

int main(int argc, char** argv) {
    PrecisionContext ctx;
    mpfr_prec_t pb = 256;
    std::string which = argc > 1 ? argv[1] : "all";

    auto mk = [&](std::initializer_list<double> xs) {
        std::vector<BigComplex> v;
        for (double d : xs) v.push_back(BigComplex(BigFloat::from_double(d, pb)));
        return v;
    };
    BigFloat pi = BigFloat::pi(pb);

    if (which == "all" || which == "p1a") {
        IdentityParams p;
        p.xs = mk({1});
        p.as_ = mk({0});
        p.thetas = {BigComplex(pi / 2L)};
        p.t = BigComplex(BigFloat::from_double(1.0 / 3.0, pb));
        show(prop1_eval(p, ctx));
    }
    if (which == "all" || which == "p1b") {
        IdentityParams p;
        p.xs = {BigComplex::from_long(1, pb), BigComplex::i_unit(pb)};
        p.as_ = mk({1, 0});
        p.thetas = {BigComplex(pi), BigComplex(pi)};
        p.t = BigComplex(BigFloat::from_double(1.0 / 3.0, pb));
        show(prop1_eval(p, ctx));
    }
    if (which == "all" || which == "p1c") {
        IdentityParams p;
        p.xs = mk({1, 1});
        p.as_ = mk({1, 0.5});
        p.thetas = {BigComplex(pi), BigComplex(pi)};
        p.t = BigComplex::from_long(0, pb);
        show(prop1_eval(p, ctx));
    }
    if (which == "all" || which == "p2a") {
        IdentityParams p;
        p.xs = {BigComplex::from_long(1, pb), BigComplex::i_unit(pb)};
        p.as_ = mk({0, 0});
        p.thetas = {BigComplex(pi / 2L), BigComplex(pi / 2L)};
        p.t = BigComplex(BigFloat::from_double(1.0 / 3.0, pb));
        show(prop2_eval(p, ctx));
    }
    if (which == "all" || which == "p2b") {
        // generic real instance, both outers on the split path
        IdentityParams p;
        p.xs = mk({1, 1});
        p.as_ = mk({0.5, 0.25});
        p.thetas = {BigComplex(pi / 3L), BigComplex(pi / 5L)};
        p.t = BigComplex(BigFloat::from_double(1.0 / 7.0, pb));
        show(prop2_eval(p, ctx));
    }
    if (which == "all" || which == "p3a") {
        IdentityParams p;
        p.xs = mk({1});
        p.as_ = mk({0});
        p.thetas = {BigComplex(pi / 2L)};
        p.ys = mk({1});
        p.bs = mk({1});
        p.betas = {BigComplex(pi / 2L)};
        p.t = BigComplex(BigFloat::from_double(0.5, pb));
        show(prop3_eval(p, ctx));
    }
    if (which == "all" || which == "p7a") {
        IdentityParams p;
        p.xs = mk({1, 2});
        p.thetas = {BigComplex(pi), BigComplex(pi)};
        p.w = BigComplex(BigFloat::from_double(0.5, pb));
        show(prop7_eval(p, ctx));
    }
    if (which == "all" || which == "p7b") {
        // swap of p7a: both sides negate
        IdentityParams p;
        p.xs = mk({2, 1});
        p.thetas = {BigComplex(pi), BigComplex(pi)};
        p.w = BigComplex(BigFloat::from_double(0.5, pb));
        show(prop7_eval(p, ctx));
    }
    if (which == "all" || which == "p7c") {
        // equal families: exact cancellation
        IdentityParams p;
        p.xs = mk({1, 1});
        p.thetas = {BigComplex(pi / 3L), BigComplex(pi / 3L)};
        p.w = BigComplex(BigFloat::from_double(0.5, pb));
        show(prop7_eval(p, ctx));
    }
    if (which == "all" || which == "p7d") {
        // complex-conjugate pair x2 = conj(x1): lhs purely imaginary
        IdentityParams p;
        BigComplex ph = exp(BigComplex(BigFloat::from_long(0, pb), pi / 8L));
        p.xs = {ph, conj(ph)};
        p.thetas = {BigComplex(pi / 2L), BigComplex(pi / 2L)};
        p.w = BigComplex(BigFloat::from_double(0.5, pb));
        show(prop7_eval(p, ctx));
    }
    if (which == "all" || which == "c310a") {
        IdentityParams p;
        BigFloat al = sqrt(pi / 2L);
        p.xs = {BigComplex(al), BigComplex(pi / al)};
        p.thetas = {BigComplex::from_long(1, pb), BigComplex(BigFloat::from_double(0.5, pb))};
        show(cor310_eval(p, ctx));
    }
    if (which == "all" || which == "c310b") {
        // alpha = beta = sqrt(pi), equal thetas: both sides 0
        IdentityParams p;
        BigFloat al = sqrt(pi);
        p.xs = {BigComplex(al), BigComplex(al)};
        p.thetas = {BigComplex::from_long(1, pb), BigComplex::from_long(1, pb)};
        show(cor310_eval(p, ctx));
    }
    if (which == "all" || which == "e311a") {
        IdentityParams p;
        p.xs = mk({1, 2});
        p.w = BigComplex(BigFloat::from_double(0.5, pb));
        show(eq311_eval(p, ctx));
    }
    if (which == "all" || which == "e311b") {
        IdentityParams p;
        p.xs = mk({1, 2});
        p.w = BigComplex::from_long(10, pb);
        show(eq311_eval(p, ctx));
    }
    if (which == "all" || which == "e311c") {
        // x1 = x2: both sides vanish
        IdentityParams p;
        p.xs = mk({1, 1});
        p.w = BigComplex(BigFloat::from_double(0.5, pb));
        show(eq311_eval(p, ctx));
    }
    if (which == "all" || which == "t5a") {
        // single cos kernel: the tautology instance
        std::vector<FunctionExpansion> fs = {expansion_cos_kernel(BigComplex(pi))};
        show(theorem5_eval(fs, mk({1}), mk({0}),
                           BigComplex(BigFloat::from_double(0.3, pb)), ctx));
    }
    if (which == "all" || which == "t5b") {
        // cos-kernel pair on squared coordinates; lhs should equal
        // (x1 x2) * prop1.rhs at x=[1, e^{i pi/4}], t=1/2
        std::vector<FunctionExpansion> fs = {expansion_cos_kernel(BigComplex(pi)),
                                             expansion_cos_kernel(BigComplex(pi))};
        std::vector<BigComplex> X = {BigComplex::from_long(1, pb), BigComplex::i_unit(pb)};
        auto r5 = theorem5_eval(fs, X, mk({0, 0}),
                                BigComplex(BigFloat::from_double(0.25, pb)), ctx);
        show(r5);
        IdentityParams p;
        p.xs = {BigComplex::from_long(1, pb),
                exp(BigComplex(BigFloat::from_long(0, pb), pi / 4L))};
        p.as_ = mk({0, 0});
        p.thetas = {BigComplex(pi), BigComplex(pi)};
        p.t = BigComplex(BigFloat::from_double(0.5, pb));
        auto r1 = prop1_eval(p, ctx);
        BigComplex want = BigComplex::i_unit(pb) * r1.rhs;
        std::printf("  cross |thm5.lhs - i*prop1.rhs| = %s\n",
                    abs(r5.lhs - want).to_string(6).c_str());
    }
    if (which == "all" || which == "t5c") {
        // the n^2 / n^4 pole families; family 1 needs the exchanged order
        std::vector<FunctionExpansion> fs = {expansion_inverse_squares(),
                                             expansion_inverse_fourth()};
        show(theorem5_eval(fs, mk({1, 1}),
                           {BigComplex::from_long(0, pb),
                            BigComplex(BigFloat::from_long(1, pb) / 3L)},
                           BigComplex(BigFloat::from_long(1, pb) / 5L), ctx));
    }
    if (which == "all" || which == "t6a") {
        // gs empty: delegates to theorem5
        std::vector<FunctionExpansion> fs = {expansion_cos_kernel(BigComplex(pi))};
        auto r = theorem6_eval(fs, {}, mk({1}), mk({0}), {}, {},
                               BigComplex(BigFloat::from_double(0.3, pb)), ctx);
        std::printf("  [t6a id=%s]\n", r.identity_id.c_str());
        show(r);
    }
    if (which == "all" || which == "t6b") {
        // sin kernels both sides; lhs should equal (pi/4) * prop3.rhs
        std::vector<FunctionExpansion> fs = {expansion_sin_kernel(BigComplex(pi / 2L))};
        std::vector<FunctionExpansion> gs = {expansion_sin_kernel(BigComplex(pi / 2L))};
        auto r6 = theorem6_eval(fs, gs, mk({1}), mk({0}), mk({1}), mk({1}),
                                BigComplex(BigFloat::from_double(0.25, pb)), ctx);
        show(r6);
        IdentityParams p;
        p.xs = mk({1});
        p.as_ = mk({0});
        p.thetas = {BigComplex(pi / 2L)};
        p.ys = mk({1});
        p.bs = mk({1});
        p.betas = {BigComplex(pi / 2L)};
        p.t = BigComplex(BigFloat::from_double(0.5, pb));
        auto r3 = prop3_eval(p, ctx);
        BigComplex want = BigComplex(BigFloat::pi(pb)) / 4L * r3.rhs;
        std::printf("  cross |thm6.lhs - (pi/4)*prop3.rhs| = %s\n",
                    abs(r6.lhs - want).to_string(6).c_str());
    }
    if (which == "all" || which == "t6c") {
        // random instance with exponential residues; closed forms by direct
        // summation of the defining series
        auto mk_exp = [&](long base, std::function<BigComplex(long, mpfr_prec_t)> pole) {
            FunctionExpansion e;
            e.residue = [base](long n, mpfr_prec_t bits) {
                return BigComplex(BigFloat::from_long(1, bits) /
                                  pow_si(BigFloat::from_long(base, bits), n));
            };
            e.pole = pole;
            auto R = e.residue;
            auto C = e.pole;
            e.closed_form = [R, C](const BigComplex& z, const PrecisionContext& cx) {
                mpfr_prec_t wb = cx.working_bits();
                TermFn tf = [&](long n) { return R(n, wb) / (C(n, wb) - z.to_prec(wb)); };
                return sum_direct(tf, 1, cx).value;
            };
            e.decay_class = DecayClass::exponential;
            e.n0 = 1;
            return e;
        };
        auto sq = [](long n, mpfr_prec_t bits) { return BigComplex::from_long(n, bits) * n; };
        auto sqn = [](long n, mpfr_prec_t bits) {
            return BigComplex::from_long(n, bits) * (n + 1);
        };
        std::vector<FunctionExpansion> fs = {mk_exp(2, sq), mk_exp(3, sqn)};
        std::vector<FunctionExpansion> gs = {mk_exp(2, sq)};
        std::vector<BigComplex> X = {BigComplex::from_long(1, pb),
                                     BigComplex(BigFloat::from_long(7, pb) / 5L)};
        std::vector<BigComplex> A = {BigComplex(BigFloat::from_long(1, pb) / 3L),
                                     BigComplex(BigFloat::from_long(-1, pb) / 4L)};
        std::vector<BigComplex> Y = {BigComplex(sqrt(BigFloat::from_long(2, pb)))};
        std::vector<BigComplex> B = {BigComplex(BigFloat::from_long(1, pb) / 3L)};
        show(theorem6_eval(fs, gs, X, A, Y, B,
                           BigComplex(BigFloat::from_long(7, pb) / 10L), ctx));
    }
    auto frac = [&](long n, long d) { return BigComplex(BigFloat::from_long(n, pb) / d); };
    auto rootinv = [&](long k) {
        return BigComplex(BigFloat::from_long(1, pb) / sqrt(BigFloat::from_long(k, pb)));
    };

    if (which == "all" || which == "c41") {
        IdentityParams p;
        p.xs = {BigComplex::from_long(1, pb), BigComplex::i_unit(pb)};
        p.as_ = mk({1, 0});
        p.t = frac(1, 3);
        auto r = cor4_family_eval("cor4.1", p, ctx);
        show(r);
        IdentityParams q = p;
        q.thetas = {BigComplex(pi), BigComplex(pi)};
        auto r1 = prop1_eval(q, ctx);
        std::printf("  cross |c41.rhs - prop1(th=pi).rhs| = %s\n",
                    abs(r.rhs - r1.rhs).to_string(6).c_str());
    }
    if (which == "all" || which == "c43") {
        IdentityParams p;
        p.xs = {BigComplex::from_long(1, pb), BigComplex::i_unit(pb)};
        p.as_ = mk({1, 0});
        p.t = frac(1, 3);
        show(cor4_family_eval("cor4.3", p, ctx));
    }
    if (which == "all" || which == "c44") {
        IdentityParams p;
        p.as_ = {frac(1, 2), frac(1, 3)};
        auto r4 = cor4_family_eval("cor4.4", p, ctx);
        show(r4);
        IdentityParams q;
        q.xs = mk({1, 1});
        q.as_ = {frac(1, 2), frac(1, 3)};
        q.t = BigComplex::from_long(0, pb);
        auto r3 = cor4_family_eval("cor4.3", q, ctx);
        std::printf("  cross |c43(t=0,x=1).lhs + c44.lhs| = %s\n",
                    abs(r3.lhs + r4.lhs).to_string(6).c_str());
        std::printf("  cross |c43(t=0,x=1).rhs + c44.rhs| = %s\n",
                    abs(r3.rhs + r4.rhs).to_string(6).c_str());
    }
    if (which == "all" || which == "c45") {
        IdentityParams p;
        p.as_ = {BigComplex::from_long(1, pb), rootinv(2)};
        auto r = cor4_family_eval("eq4.5", p, ctx);
        show(r);
        BigFloat s2 = sqrt(BigFloat::from_long(2, pb));
        BigComplex half = BigComplex(s2 * pi / 2L);
        BigComplex want = BigComplex(s2) * coth(half) - BigComplex(s2 / 2L) * cot(half) -
                          BigComplex(s2 * pi / 2L) * coth(BigComplex(pi)) * coth(half);
        std::printf("  cross |c45.rhs - printed| = %s\n", abs(r.rhs - want).to_string(6).c_str());
    }
    if (which == "all" || which == "c46") {
        IdentityParams p;
        p.as_ = {rootinv(2), rootinv(3)};
        auto r = cor4_family_eval("eq4.6", p, ctx);
        show(r);
        BigFloat s2 = sqrt(BigFloat::from_long(2, pb));
        BigFloat s3 = sqrt(BigFloat::from_long(3, pb));
        BigFloat s6 = sqrt(BigFloat::from_long(6, pb));
        BigComplex want = BigComplex(s6 * 3L / 2L) * coth(BigComplex(s6 * pi / 6L)) -
                          BigComplex(s6 * pi / 2L) * coth(BigComplex(s2 * pi / 2L)) *
                              coth(BigComplex(s3 * pi / 3L)) -
                          BigComplex(s6) * cot(BigComplex(s6 * pi / 6L));
        std::printf("  cross |c46.rhs - printed| = %s\n", abs(r.rhs - want).to_string(6).c_str());
    }
    if (which == "all" || which == "c47") {
        IdentityParams p;
        p.as_ = {frac(1, 2), frac(1, 3)};
        show(cor4_family_eval("cor4.7", p, ctx));
    }
    if (which == "all" || which == "c48") {
        IdentityParams p;
        p.as_ = {rootinv(2), rootinv(3)};
        auto r = cor4_family_eval("eq4.8", p, ctx);
        show(r);
        BigFloat s2 = sqrt(BigFloat::from_long(2, pb));
        BigFloat s3 = sqrt(BigFloat::from_long(3, pb));
        BigFloat s6 = sqrt(BigFloat::from_long(6, pb));
        BigComplex want = BigComplex(s6 / 2L) * coth(BigComplex(pi * s6 / 6L)) -
                          BigComplex(pi * s6 / 2L) * coth(BigComplex(pi * s2 / 2L)) *
                              cot(BigComplex(pi * s3 / 3L));
        std::printf("  cross |c48.rhs - printed| = %s\n", abs(r.rhs - want).to_string(6).c_str());
    }
    if (which == "all" || which == "c410") {
        IdentityParams p;
        p.xs = {frac(1, 2), frac(1, 3)};
        show(cor4_family_eval("cor4.10", p, ctx));
    }
    if (which == "all" || which == "c412") {
        IdentityParams p;
        p.xs = {BigComplex(pi / 2L), BigComplex(pi * 2L)};
        p.w = frac(1, 3);
        show(cor4_family_eval("eq4.12", p, ctx));
    }
    if (which == "all" || which == "c415") {
        for (long m : {1L, 3L, 6L}) {
            IdentityParams p;
            p.xs = m == 3 ? std::vector<BigComplex>{BigComplex::from_long(1, pb), frac(3, 2)}
                          : mk({1, 2});
            p.m = m;
            auto r = cor4_family_eval("eq4.15", p, ctx);
            std::printf("[m=%ld] ", m);
            show(r);
        }
        IdentityParams dg;
        dg.xs = mk({1, 1});
        dg.m = 2;
        auto r = cor4_family_eval("eq4.15", dg, ctx);
        std::printf("[degenerate m=2 x=(1,1)] warnings=%zu\n", r.hypothesis.warnings.size());
        show(r);
    }
    if (which == "all" || which == "c416") {
        IdentityParams p;
        p.thetas = {BigComplex(pi / 3L), BigComplex(pi / 4L)};
        p.xs = {BigComplex::from_long(1, pb), BigComplex::i_unit(pb)};
        p.as_ = mk({0, 0});
        p.t = frac(1, 3);
        auto r = cor4_family_eval("cor4.16", p, ctx);
        show(r);
        auto r2 = prop2_eval(p, ctx);
        std::printf("  cross |c416.lhs - prop2.lhs| = %s  |rhs - rhs| = %s\n",
                    abs(r.lhs - r2.lhs).to_string(6).c_str(),
                    abs(r.rhs - r2.rhs).to_string(6).c_str());
    }
    if (which == "all" || which == "c418") {
        IdentityParams p;
        p.thetas = {BigComplex(pi / 3L), BigComplex(pi / 3L)};
        p.xs = mk({1, 2});
        p.t = frac(1, 3);
        show(cor4_family_eval("cor4.18", p, ctx));
    }
    if (which == "all" || which == "c419") {
        IdentityParams p;
        p.as_ = {frac(1, 2), frac(1, 3)};
        show(cor4_family_eval("cor4.19", p, ctx));
    }
    if (which == "all" || which == "c420") {
        IdentityParams p;
        p.as_ = {rootinv(2), rootinv(3)};
        auto r20 = cor4_family_eval("eq4.20", p, ctx);
        show(r20);
        auto r19 = cor4_family_eval("cor4.19", p, ctx);
        std::printf("  cross |c419(sqrt a).lhs - 2*c420.lhs| = %s\n",
                    abs(r19.lhs - r20.lhs * 2L).to_string(6).c_str());
    }
    if (which == "all" || which == "c421") {
        IdentityParams p;
        p.xs = {BigComplex::from_long(1, pb), BigComplex::i_unit(pb)};
        p.as_ = mk({0, 0});
        p.t = frac(1, 3);
        show(cor4_family_eval("cor4.21", p, ctx));
    }
    if (which == "all" || which == "c422") {
        IdentityParams p;
        p.xs = {BigComplex::from_long(1, pb),
                exp(BigComplex(BigFloat::from_long(0, pb), pi / 4L)),
                BigComplex::i_unit(pb)};
        p.as_ = mk({0, 0, 0});
        p.t = frac(1, 3);
        show(cor4_family_eval("cor4.22", p, ctx));
    }
    if (which == "all" || which == "c423") {
        IdentityParams p;
        p.xs = {BigComplex::from_long(1, pb), BigComplex::i_unit(pb)};
        show(cor4_family_eval("cor4.23", p, ctx));
        IdentityParams q;
        q.xs = {BigComplex::from_long(1, pb),
                BigComplex::from_long(1, pb) + BigComplex::i_unit(pb)};
        show(cor4_family_eval("cor4.23", q, ctx));
        IdentityParams bad;
        bad.xs = mk({1, 1});
        auto rb = cor4_family_eval("cor4.23", bad, ctx);
        std::printf("[reject x=(1,1)] hyp ok=%d pass=%d violations=%zu\n",
                    (int)rb.hypothesis.ok, (int)rb.pass, rb.hypothesis.violations.size());
    }
    if (which == "all" || which == "p8a") {
        IdentityParams p;
        p.M = 1; p.N = 1;
        p.xs = mk({1, 2});
        p.t = frac(1, 3);
        show(prop8_eval(p, ctx));
    }
    if (which == "all" || which == "p8b") {
        IdentityParams p;
        p.M = 2; p.N = 1;
        p.xs = {exp(BigComplex(BigFloat::from_long(0, pb), -pi / 8L)),
                frac(3, 2)};
        p.t = frac(1, 2);
        auto r = prop8_eval(p, ctx);
        show(r);
        std::printf("  warnings=%zu", r.hypothesis.warnings.size());
        for (auto& w : r.hypothesis.warnings) std::printf(" | %s", w.c_str());
        std::printf("\n");
    }
    if (which == "all" || which == "p8c") {
        IdentityParams p;
        p.M = 2; p.N = 2;
        p.xs = {BigComplex::from_long(1, pb),
                exp(BigComplex(BigFloat::from_long(0, pb), -pi / 8L)) * 2L};
        p.t = frac(1, 3);
        show(prop8_eval(p, ctx));
    }
    if (which == "p8bad") {
        // Chamber check: x2 rotated with x1 real at (2,1) sits outside the
        // validity region and must fail honestly.
        IdentityParams p;
        p.M = 2; p.N = 1;
        p.xs = {BigComplex::from_long(1, pb),
                exp(BigComplex(BigFloat::from_long(0, pb), -pi / 8L)) * frac(3, 2)};
        p.t = frac(1, 2);
        show(prop8_eval(p, ctx));
    }
    return 0;
}
