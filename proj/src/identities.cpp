#include "ramv/identities.hpp"

#include <cmath>
#include <string>

#include "eval_common.hpp"
#include "ramv/errors.hpp"

namespace ramv {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DomainError(msg);
}

// Shared gate: fills ids, params, and the hypothesis report; false means the
// parameters were rejected and the evaluator must return without evaluating.
bool gate(VerificationReport& rep, const std::string& id, const IdentityParams& p,
          const PrecisionContext& ctx) {
    rep.identity_id = id;
    rep.params = p;
    rep.working_digits = ctx.working_digits();
    rep.hypothesis = validate_hypotheses(id, p, 1000, ctx);
    if (!rep.hypothesis.ok) {
        rep.pass = false;
        return false;
    }
    return true;
}

SeriesStat stat_of(const SeriesResult& r, const std::string& label) {
    SeriesStat st;
    st.label = label;
    st.terms_used = r.terms_used;
    st.strategy = r.strategy;
    st.tail_estimate = r.tail_estimate;
    st.converged = r.converged && !r.diverging;
    return st;
}

// Hyperbolic kernel ratio factor sampled on the odd lattice of the opposite
// family: q = sqrt(B^2 - 1 / (X^2 m^2 + A0^2)), value
// sinh(beta q / Y) / (q cosh(pi q / (2 Y))), with the removable q = 0 limit
// beta / Y.  q tends to B (or to 0 from the imaginary side when B = 0), so the
// factor is smooth and bounded on the whole tail.
detail::FactorSpec hyper_factor(const BigComplex& X, const BigComplex& A0, const BigComplex& B,
                                const BigComplex& beta, const BigComplex& Y,
                                const detail::EvalCtx& ec) {
    detail::FactorSpec f;
    mpfr_prec_t wb = ec.wb;
    BigComplex X2 = pow_si(X.to_prec(wb), 2), A02 = pow_si(A0.to_prec(wb), 2);
    BigComplex B2 = pow_si(B.to_prec(wb), 2);
    BigComplex Yc = Y.to_prec(wb), bc = beta.to_prec(wb);
    BigComplex picw = BigComplex(BigFloat::pi(wb));
    BigFloat snapq = ec.snap;
    f.direct_at = [X2, A02, B2, Yc, bc, picw, snapq, wb](long nu) {
        BigComplex m = BigComplex::from_long(2 * nu + 1, wb);
        BigComplex A = X2 * m * m + A02;
        BigComplex q2 = B2 - 1L / A;
        if (abs(q2) <= snapq) return bc / Yc;
        BigComplex q = sqrt(q2);
        return sinh(bc * q / Yc) / (q * cosh(picw * q / (2L * Yc)));
    };
    auto gen = [X, A0, B, beta, Y](mpfr_prec_t bits) {
        BigComplex X2b = pow_si(X.to_prec(bits), 2);
        BigComplex A02b = pow_si(A0.to_prec(bits), 2);
        BigComplex B2b = pow_si(B.to_prec(bits), 2);
        BigComplex Yb = Y.to_prec(bits), bb = beta.to_prec(bits);
        BigComplex pic = BigComplex(BigFloat::pi(bits));
        return [=](const auto& nu) {
            auto m = nu * 2L + 1L;
            auto A = X2b * (m * m) + A02b;
            auto q = sqrt(B2b - 1L / A);
            return sinh(bb * q / Yb) / (q * cosh(pic * q / (2L * Yb)));
        };
    };
    detail::Piece p;
    p.c_w = BigComplex::from_long(1, ec.wb);
    p.c_h = BigComplex::from_long(1, ec.hb);
    p.ph_w = BigFloat::from_long(0, ec.wb);
    p.ph_h = BigFloat::from_long(0, ec.hb);
    p.gen = detail::erase_gen(gen, ec.wb, ec.hb);
    p.has_gen = true;
    p.tag = 0;
    f.pieces.push_back(p);
    // The q = 0 crossing (or, when B = 0, the last cosh pole) bounds the
    // region where the gen's square root degenerates.
    detail::LatticeMap odd{2, 1};
    BigComplex cc = abs(B2) > ec.snap ? A02 - 1L / B2 : A02 - 1L / pow_si(Yc, 2);
    f.clearance = detail::clearance_radius(X, cc, odd);
    return f;
}

// sinh(beta sigma / y) / (sigma cosh(pi sigma / (2 y))) at sigma^2 = b^2 - 1/t^2,
// with the sigma = 0 limit beta / y.
BigComplex closed_sinh_ratio(const BigComplex& t, const BigComplex& b, const BigComplex& y,
                             const BigComplex& beta, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits();
    BigComplex s2 = (b * b - 1L / (t * t)).to_prec(wb);
    BigFloat lim = tenpow(-(ctx.working_digits() - 10), wb) * (1L + abs(b * b));
    if (abs(s2) <= lim) return (beta / y).to_prec(wb);
    BigComplex s = sqrt(s2);
    BigComplex pic = BigComplex(BigFloat::pi(wb));
    return sinh(beta * s / y) / (s * cosh(pic * s / (2L * y)));
}

} // namespace

VerificationReport prop1_eval(const IdentityParams& p, const PrecisionContext& ctx) {
    size_t M = p.xs.size();
    require(M >= 1 && p.thetas.size() == M && p.as_.size() == M,
            "prop1 needs xs, as, thetas of one common size >= 1");
    require(p.t.is_finite(), "prop1 needs a finite t");
    for (size_t i = 0; i < M; ++i)
        require(p.xs[i].is_finite() && p.as_[i].is_finite() && p.thetas[i].is_finite(),
                "prop1 parameters must all be finite");

    VerificationReport rep;
    if (!gate(rep, "prop1", p, ctx)) return rep;

    detail::EvalCtx ec(ctx);
    mpfr_prec_t wb = ec.wb;
    BigComplex t = p.t.to_prec(wb);
    detail::LatticeMap nat{1, 0};

    DecayClass worst = DecayClass::exponential;
    bool ok = true;
    BigComplex lhs = BigComplex::from_long(0, wb);
    for (size_t i = 0; i < M; ++i) {
        BigComplex xi = p.xs[i].to_prec(wb);
        BigComplex ai = p.as_[i].to_prec(wb);
        BigComplex thi = p.thetas[i].to_prec(wb);
        detail::OuterSpec os;
        os.label = "lhs/i" + std::to_string(i + 1);
        os.prefactor = BigComplex::from_long(1, wb);
        os.nu0 = 1;
        os.weight = detail::cos_weight_pieces(thi, ec);
        os.weight_at = [thi, wb](long n) {
            BigComplex c = cos(thi * n);
            return n % 2 == 0 ? 0L - c : c;
        };
        BigComplex ci = ai * ai - t * t;
        auto rgen = [xi, ci](mpfr_prec_t bits) {
            BigComplex x2b = pow_si(xi.to_prec(bits), 2);
            BigComplex cb = ci.to_prec(bits);
            return [=](const auto& nu) { return 1L / (x2b * (nu * nu) + cb); };
        };
        os.R = detail::erase_gen(rgen, ec.wb, ec.hb);
        os.clearance = static_cast<long>(std::ceil(detail::clearance_radius(xi, ci, nat))) + 1;
        for (size_t j = 0; j < M; ++j) {
            if (j == i) continue;
            BigComplex aj = p.as_[j].to_prec(wb);
            os.factors.push_back(detail::cos_factor(xi, p.xs[j].to_prec(wb),
                                                    p.thetas[j].to_prec(wb), ai * ai - aj * aj,
                                                    nat, ec));
        }
        lhs = lhs + detail::eval_outer(os, ec, rep.series_stats, worst, ok);
    }

    BigComplex rhs = BigComplex::from_long(1, wb);
    for (size_t i = 0; i < M; ++i)
        rhs = rhs * detail::closed_cos_factor(t, p.as_[i].to_prec(wb), p.xs[i].to_prec(wb),
                                              p.thetas[i].to_prec(wb), ctx);

    detail::finish_report(rep, lhs, rhs, worst, ok, ctx);
    return rep;
}

VerificationReport prop2_eval(const IdentityParams& p, const PrecisionContext& ctx) {
    size_t M = p.xs.size();
    require(M >= 1 && p.thetas.size() == M && p.as_.size() == M,
            "prop2 needs xs, as, thetas of one common size >= 1");
    require(p.t.is_finite(), "prop2 needs a finite t");
    for (size_t i = 0; i < M; ++i)
        require(p.xs[i].is_finite() && p.as_[i].is_finite() && p.thetas[i].is_finite(),
                "prop2 parameters must all be finite");

    VerificationReport rep;
    if (!gate(rep, "prop2", p, ctx)) return rep;

    detail::EvalCtx ec(ctx);
    mpfr_prec_t wb = ec.wb;
    BigComplex t = p.t.to_prec(wb);
    detail::LatticeMap odd{2, 1};

    DecayClass worst = DecayClass::exponential;
    bool ok = true;
    BigComplex lhs = BigComplex::from_long(0, wb);
    for (size_t i = 0; i < M; ++i) {
        BigComplex xi = p.xs[i].to_prec(wb);
        BigComplex ai = p.as_[i].to_prec(wb);
        BigComplex thi = p.thetas[i].to_prec(wb);
        detail::OuterSpec os;
        os.label = "lhs/i" + std::to_string(i + 1);
        os.prefactor = xi;
        os.nu0 = 0;
        os.vanishes = ec.nearly_zero(thi);
        os.weight = detail::sin_weight_pieces(thi, ec);
        os.weight_at = [thi, wb](long n) {
            BigComplex s = sin(thi * (2 * n + 1));
            return n % 2 == 0 ? s : 0L - s;
        };
        BigComplex ci = ai * ai - t * t;
        auto rgen = [xi, ci](mpfr_prec_t bits) {
            BigComplex x2b = pow_si(xi.to_prec(bits), 2);
            BigComplex cb = ci.to_prec(bits);
            return [=](const auto& nu) {
                auto m = nu * 2L + 1L;
                return 1L / (x2b * (m * m) + cb);
            };
        };
        os.R = detail::erase_gen(rgen, ec.wb, ec.hb);
        os.clearance = static_cast<long>(std::ceil(detail::clearance_radius(xi, ci, odd))) + 1;
        for (size_t j = 0; j < M; ++j) {
            if (j == i) continue;
            BigComplex aj = p.as_[j].to_prec(wb);
            os.factors.push_back(detail::sin_factor(xi, p.xs[j].to_prec(wb),
                                                    p.thetas[j].to_prec(wb), ai * ai - aj * aj,
                                                    ec));
        }
        lhs = lhs + detail::eval_outer(os, ec, rep.series_stats, worst, ok);
    }

    BigComplex rhs = BigComplex(BigFloat::pi(wb)) / 4L;
    for (size_t i = 0; i < M; ++i)
        rhs = rhs * detail::closed_sin_ratio(t, p.as_[i].to_prec(wb), p.xs[i].to_prec(wb),
                                             p.thetas[i].to_prec(wb), ctx);

    detail::finish_report(rep, lhs, rhs, worst, ok, ctx);
    return rep;
}

VerificationReport prop3_eval(const IdentityParams& p, const PrecisionContext& ctx) {
    size_t M = p.xs.size(), N = p.ys.size();
    require(M >= 1 && p.thetas.size() == M && p.as_.size() == M,
            "prop3 needs xs, as, thetas of one common size >= 1");
    require(N >= 1 && p.betas.size() == N && p.bs.size() == N,
            "prop3 needs ys, bs, betas of one common size >= 1");
    require(p.t.is_finite(), "prop3 needs a finite t");
    if (abs(p.t) <= tenpow(-ctx.working_digits(), p.t.prec()))
        throw DomainError("prop3 needs t != 0: 1/t^2 enters the second family");

    VerificationReport rep;
    if (!gate(rep, "prop3", p, ctx)) return rep;

    detail::EvalCtx ec(ctx);
    mpfr_prec_t wb = ec.wb;
    BigComplex t = p.t.to_prec(wb);
    detail::LatticeMap odd{2, 1};

    DecayClass worst = DecayClass::exponential;
    bool ok = true;
    BigComplex lhs = BigComplex::from_long(0, wb);
    for (size_t i = 0; i < M; ++i) {
        BigComplex xi = p.xs[i].to_prec(wb);
        BigComplex ai = p.as_[i].to_prec(wb);
        BigComplex thi = p.thetas[i].to_prec(wb);
        detail::OuterSpec os;
        os.label = "lhs/x" + std::to_string(i + 1);
        os.prefactor = xi;
        os.nu0 = 0;
        os.vanishes = ec.nearly_zero(thi);
        os.weight = detail::sin_weight_pieces(thi, ec);
        os.weight_at = [thi, wb](long n) {
            BigComplex s = sin(thi * (2 * n + 1));
            return n % 2 == 0 ? s : 0L - s;
        };
        BigComplex ci = ai * ai - t * t;
        auto rgen = [xi, ci](mpfr_prec_t bits) {
            BigComplex x2b = pow_si(xi.to_prec(bits), 2);
            BigComplex cb = ci.to_prec(bits);
            return [=](const auto& nu) {
                auto m = nu * 2L + 1L;
                return 1L / (x2b * (m * m) + cb);
            };
        };
        os.R = detail::erase_gen(rgen, ec.wb, ec.hb);
        os.clearance = static_cast<long>(std::ceil(detail::clearance_radius(xi, ci, odd))) + 1;
        for (size_t j = 0; j < M; ++j) {
            if (j == i) continue;
            BigComplex aj = p.as_[j].to_prec(wb);
            os.factors.push_back(detail::sin_factor(xi, p.xs[j].to_prec(wb),
                                                    p.thetas[j].to_prec(wb), ai * ai - aj * aj,
                                                    ec));
        }
        for (size_t j = 0; j < N; ++j)
            os.factors.push_back(hyper_factor(xi, ai, p.bs[j].to_prec(wb), p.betas[j].to_prec(wb),
                                              p.ys[j].to_prec(wb), ec));
        lhs = lhs + detail::eval_outer(os, ec, rep.series_stats, worst, ok);
    }
    for (size_t i = 0; i < N; ++i) {
        BigComplex yi = p.ys[i].to_prec(wb);
        BigComplex bi = p.bs[i].to_prec(wb);
        BigComplex bti = p.betas[i].to_prec(wb);
        detail::OuterSpec os;
        os.label = "lhs/y" + std::to_string(i + 1);
        os.prefactor = yi;
        os.nu0 = 0;
        os.vanishes = ec.nearly_zero(bti);
        os.weight = detail::sin_weight_pieces(bti, ec);
        os.weight_at = [bti, wb](long n) {
            BigComplex s = sin(bti * (2 * n + 1));
            return n % 2 == 0 ? s : 0L - s;
        };
        BigComplex t2 = t * t;
        auto rgen = [yi, bi, t2](mpfr_prec_t bits) {
            BigComplex y2b = pow_si(yi.to_prec(bits), 2);
            BigComplex b2b = pow_si(bi.to_prec(bits), 2);
            BigComplex t2b = t2.to_prec(bits);
            return [=](const auto& nu) {
                auto m = nu * 2L + 1L;
                auto B = y2b * (m * m) + b2b;
                return 1L / (B * (t2b * B - 1L));
            };
        };
        os.R = detail::erase_gen(rgen, ec.wb, ec.hb);
        double r0 = detail::clearance_radius(yi, bi * bi, odd);
        double r1 = detail::clearance_radius(yi, bi * bi - 1L / t2, odd);
        os.clearance = static_cast<long>(std::ceil(std::max(r0, r1))) + 1;
        for (size_t j = 0; j < M; ++j)
            os.factors.push_back(hyper_factor(yi, bi, p.as_[j].to_prec(wb),
                                              p.thetas[j].to_prec(wb), p.xs[j].to_prec(wb), ec));
        for (size_t j = 0; j < N; ++j) {
            if (j == i) continue;
            BigComplex bj = p.bs[j].to_prec(wb);
            os.factors.push_back(detail::sin_factor(yi, p.ys[j].to_prec(wb),
                                                    p.betas[j].to_prec(wb), bi * bi - bj * bj,
                                                    ec));
        }
        lhs = lhs + detail::eval_outer(os, ec, rep.series_stats, worst, ok);
    }

    BigComplex rhs = BigComplex(BigFloat::pi(wb)) / 4L;
    for (size_t i = 0; i < M; ++i)
        rhs = rhs * detail::closed_sin_ratio(t, p.as_[i].to_prec(wb), p.xs[i].to_prec(wb),
                                             p.thetas[i].to_prec(wb), ctx);
    for (size_t i = 0; i < N; ++i)
        rhs = rhs * closed_sinh_ratio(t, p.bs[i].to_prec(wb), p.ys[i].to_prec(wb),
                                      p.betas[i].to_prec(wb), ctx);

    detail::finish_report(rep, lhs, rhs, worst, ok, ctx);
    return rep;
}

VerificationReport prop7_eval(const IdentityParams& p, const PrecisionContext& ctx) {
    require(p.xs.size() == 2 && p.thetas.size() == 2, "prop7 needs x1, x2 and theta1, theta2");
    require(p.w.is_finite() && p.xs[0].is_finite() && p.xs[1].is_finite() &&
                p.thetas[0].is_finite() && p.thetas[1].is_finite(),
            "prop7 parameters must all be finite");

    VerificationReport rep;
    if (!gate(rep, "prop7", p, ctx)) return rep;

    mpfr_prec_t wb = ctx.working_bits();
    BigComplex x1 = p.xs[0].to_prec(wb), x2 = p.xs[1].to_prec(wb);
    BigComplex th1 = p.thetas[0].to_prec(wb), th2 = p.thetas[1].to_prec(wb);
    BigComplex w = p.w.to_prec(wb);
    BigComplex pic = BigComplex(BigFloat::pi(wb));
    BigComplex x1s = x1 * x1, x2s = x2 * x2, w2 = w * w;
    BigComplex e1 = 2L * pic / x2, e2 = 2L * pic / x1;

    bool ok = true;
    auto run = [&](const TermFn& f, const char* label) {
        SeriesResult r = sum_direct(f, 1, ctx);
        rep.series_stats.push_back(stat_of(r, label));
        ok = ok && r.converged && !r.diverging;
        return r.value;
    };

    TermFn tA = [x1s, w2, th1, th2, x2, e1, wb](long n) {
        BigComplex m = BigComplex::from_long(n, wb);
        BigComplex S = sqrt(x1s * m * m + w2);
        return cos(th1 * n) * cosh(th2 * S / x2) / (S * (exp(e1 * S) - 1L));
    };
    TermFn tB = [x2s, w2, th2, th1, x1, e2, wb](long n) {
        BigComplex m = BigComplex::from_long(n, wb);
        BigComplex S = sqrt(x2s * m * m + w2);
        return cos(th2 * n) * cosh(th1 * S / x1) / (S * (exp(e2 * S) - 1L));
    };
    BigComplex lhs = run(tA, "lhs/first") / x2 - run(tB, "lhs/second") / x1;

    TermFn rA = [x2s, w2, th2, th1, x1, wb](long n) {
        BigComplex m = BigComplex::from_long(n, wb);
        BigComplex S = sqrt(x2s * m * m + w2);
        return cos(th2 * n) * exp((0L - th1) * S / x1) / S;
    };
    TermFn rB = [x1s, w2, th1, th2, x2, wb](long n) {
        BigComplex m = BigComplex::from_long(n, wb);
        BigComplex S = sqrt(x1s * m * m + w2);
        return cos(th1 * n) * exp((0L - th2) * S / x2) / S;
    };
    BigComplex closed = cosh(th1 * w / x1) * coth(pic * w / x1) / (4L * w * x1) -
                        cosh(th2 * w / x2) * coth(pic * w / x2) / (4L * w * x2) +
                        sinh(th2 * w / x2) / (4L * w * x2) - sinh(th1 * w / x1) / (4L * w * x1);
    BigComplex rhs = closed + run(rA, "rhs/first") / (2L * x1) - run(rB, "rhs/second") / (2L * x2);

    detail::finish_report(rep, lhs, rhs, DecayClass::exponential, ok, ctx);
    return rep;
}

VerificationReport cor310_eval(const IdentityParams& p, const PrecisionContext& ctx) {
    require(p.xs.size() == 2 && p.thetas.size() == 2, "cor3.10 needs alpha, beta and two thetas");
    require(p.xs[0].is_finite() && p.xs[1].is_finite() && p.thetas[0].is_finite() &&
                p.thetas[1].is_finite(),
            "cor3.10 parameters must all be finite");

    VerificationReport rep;
    if (!gate(rep, "cor3.10", p, ctx)) return rep;

    mpfr_prec_t wb = ctx.working_bits();
    BigComplex al = p.xs[0].to_prec(wb), be = p.xs[1].to_prec(wb);
    BigComplex th1 = p.thetas[0].to_prec(wb), th2 = p.thetas[1].to_prec(wb);

    bool ok = true;
    auto run = [&](const TermFn& f, const char* label) {
        SeriesResult r = sum_direct(f, 1, ctx);
        rep.series_stats.push_back(stat_of(r, label));
        ok = ok && r.converged && !r.diverging;
        return r.value;
    };

    BigComplex ca = th1 * al, ha = th2 * al, ea = 2L * al * al;
    BigComplex cb = th2 * be, hb2 = th1 * be, eb = 2L * be * be;
    TermFn tA = [ca, ha, ea, wb](long n) {
        BigComplex m = BigComplex::from_long(n, wb);
        return cos(ca * n) * cosh(ha * n) / (m * (exp(ea * m) - 1L));
    };
    TermFn tB = [cb, hb2, eb, wb](long n) {
        BigComplex m = BigComplex::from_long(n, wb);
        return cos(cb * n) * cosh(hb2 * n) / (m * (exp(eb * m) - 1L));
    };
    BigComplex lhs = run(tA, "lhs/alpha") - run(tB, "lhs/beta");

    BigComplex rhs = (th1 * th1 - th2 * th2) / 8L + (be * be - al * al) / 12L +
                     log((cosh(th2 * al) - cos(th1 * al)) / (cosh(th1 * be) - cos(th2 * be))) / 4L;

    detail::finish_report(rep, lhs, rhs, DecayClass::exponential, ok, ctx);
    return rep;
}

VerificationReport eq311_eval(const IdentityParams& p, const PrecisionContext& ctx) {
    require(p.xs.size() == 2, "eq3.11 needs x1 and x2");
    require(p.w.is_finite() && p.xs[0].is_finite() && p.xs[1].is_finite(),
            "eq3.11 parameters must all be finite");

    VerificationReport rep;
    if (!gate(rep, "eq3.11", p, ctx)) return rep;

    detail::EvalCtx ec(ctx);
    mpfr_prec_t wb = ec.wb;
    BigComplex x1 = p.xs[0].to_prec(wb), x2 = p.xs[1].to_prec(wb);
    BigComplex w = p.w.to_prec(wb);
    BigComplex pic = BigComplex(BigFloat::pi(wb));
    BigComplex x1s = x1 * x1, x2s = x2 * x2, w2 = w * w;
    BigComplex e1 = 2L * pic / x2, e2 = 2L * pic / x1;

    bool ok = true;
    DecayClass worst = DecayClass::exponential;
    auto run = [&](const TermFn& f, const char* label) {
        SeriesResult r = sum_direct(f, 1, ctx);
        rep.series_stats.push_back(stat_of(r, label));
        ok = ok && r.converged && !r.diverging;
        return r.value;
    };

    TermFn tA = [x1s, w2, e1, wb](long n) {
        BigComplex m = BigComplex::from_long(n, wb);
        BigComplex S = sqrt(x1s * m * m + w2);
        return 1L / (S * (exp(e1 * S) - 1L));
    };
    TermFn tB = [x2s, w2, e2, wb](long n) {
        BigComplex m = BigComplex::from_long(n, wb);
        BigComplex S = sqrt(x2s * m * m + w2);
        return 1L / (S * (exp(e2 * S) - 1L));
    };
    BigComplex lhs = run(tA, "lhs/first") / x2 - run(tB, "lhs/second") / x1;

    // The two halves of the correction series diverge like harmonic sums;
    // only the paired difference, decaying like n^-3, may be summed.
    auto dgen = [x1, x2, w2](mpfr_prec_t bits) {
        BigComplex x1b = x1.to_prec(bits), x2b = x2.to_prec(bits);
        BigComplex x1sb = pow_si(x1b, 2), x2sb = pow_si(x2b, 2);
        BigComplex w2b = w2.to_prec(bits);
        return [=](const auto& nu) {
            auto s1 = sqrt(x1sb * (nu * nu) + w2b);
            auto s2 = sqrt(x2sb * (nu * nu) + w2b);
            return 1L / (x1b * s2) - 1L / (x2b * s1);
        };
    };
    StructuredTerm st = make_structured(dgen, ec.wb, ec.hb);
    detail::LatticeMap nat{1, 0};
    double r1 = detail::clearance_radius(x1, w2, nat);
    double r2 = detail::clearance_radius(x2, w2, nat);
    long ms = static_cast<long>(std::ceil(std::max(r1, r2))) + 1;
    SeriesResult rp = sum_em_taylor(st, 1, ctx, ms);
    rep.series_stats.push_back(stat_of(rp, "rhs/paired"));
    ok = ok && rp.converged && !rp.diverging;
    worst = DecayClass::monotone_poly;

    BigComplex rhs = coth(pic * w / x1) / (4L * w * x1) - coth(pic * w / x2) / (4L * w * x2) +
                     rp.value / 2L + log(x1 / x2) / (2L * x1 * x2);

    detail::finish_report(rep, lhs, rhs, worst, ok, ctx);
    return rep;
}

} // namespace ramv
