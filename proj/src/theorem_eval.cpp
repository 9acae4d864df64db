#include "ramv/identities.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "eval_common.hpp"
#include "ramv/errors.hpp"
#include "ramv/kernels.hpp"

namespace ramv {

namespace {

void require_shape(bool cond, const char* msg) {
    if (!cond) throw DegenerateInput(msg);
}

// A context whose working precision covers `bits`, for closed forms invoked
// inside the elevated-precision engine callbacks.
PrecisionContext ctx_at(const PrecisionContext& base, mpfr_prec_t bits) {
    PrecisionContext c = base;
    int wd = static_cast<int>(std::ceil((static_cast<double>(bits) - 12.0) / 3.3220));
    int g = base.guard_digits > 10 ? base.guard_digits : 10;
    if (wd - g > c.target_digits) c.target_digits = wd - g;
    return c;
}

using detail::Routed;
using detail::route_series;
using detail::widen;

// Shared scan: values[i] holds the first window of lattice points of family
// i (x_i c_i(n) + a_i resp. y_i l_i(n) + b_i); any two families colliding,
// or a lattice point hitting `special`, is a hypothesis violation.  The
// comparisons run in double first; only near-misses are re-judged exactly.
void scan_family(const std::vector<std::vector<BigComplex>>& values,
                 const std::vector<long>& n0s, const BigComplex& special, const char* pair_cond,
                 const char* special_cond, const BigFloat& snap, HypothesisReport& hr,
                 bool do_pairs = true) {
    size_t M = values.size();
    double sr = special.re().to_double(), si = special.im().to_double();
    for (size_t i = 0; i < M; ++i) {
        std::vector<std::complex<double>> di;
        di.reserve(values[i].size());
        for (const BigComplex& v : values[i])
            di.push_back({v.re().to_double(), v.im().to_double()});
        for (size_t n = 0; n < values[i].size(); ++n) {
            if (std::abs(di[n] - std::complex<double>(sr, si)) < 1e-9 * (std::abs(di[n]) + 1.0) &&
                abs(values[i][n] - special) <= snap * (abs(values[i][n]) + 1L)) {
                hr.ok = false;
                HypothesisViolation v;
                v.condition = special_cond;
                v.n = n0s[i] + static_cast<long>(n);
                v.i = static_cast<long>(i) + 1;
                hr.violations.push_back(v);
            }
        }
        if (!do_pairs) continue;
        for (size_t j = i + 1; j < M; ++j) {
            std::vector<std::complex<double>> dj;
            dj.reserve(values[j].size());
            for (const BigComplex& v : values[j])
                dj.push_back({v.re().to_double(), v.im().to_double()});
            for (size_t n = 0; n < values[i].size(); ++n)
                for (size_t k = 0; k < values[j].size(); ++k) {
                    if (std::abs(di[n] - dj[k]) >= 1e-9 * (std::abs(di[n]) + 1.0)) continue;
                    if (abs(values[i][n] - values[j][k]) > snap * (abs(values[i][n]) + 1L))
                        continue;
                    hr.ok = false;
                    HypothesisViolation v;
                    v.condition = pair_cond;
                    v.n = n0s[i] + static_cast<long>(n);
                    v.k = n0s[j] + static_cast<long>(k);
                    v.i = static_cast<long>(i) + 1;
                    v.j = static_cast<long>(j) + 1;
                    hr.violations.push_back(v);
                }
        }
    }
}

std::vector<std::vector<BigComplex>> lattice_tables(const std::vector<FunctionExpansion>& fs,
                                                    const std::vector<BigComplex>& xs,
                                                    const std::vector<BigComplex>& as_, long W,
                                                    mpfr_prec_t wb) {
    std::vector<std::vector<BigComplex>> values(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) {
        values[i].reserve(W);
        for (long n = fs[i].n0; n < fs[i].n0 + W; ++n)
            values[i].push_back(xs[i].to_prec(wb) * fs[i].pole(n, wb) + as_[i].to_prec(wb));
    }
    return values;
}

// Registration-time gate: the defining series of each expansion, summed at a
// fixed off-lattice test point, must reproduce the closed form to the
// expansion's class tolerance.
void check_expansions(const std::vector<FunctionExpansion>& fs, const char* tag,
                      const PrecisionContext& ctx, std::vector<SeriesStat>& stats) {
    mpfr_prec_t wb = ctx.working_bits();
    BigComplex ztest(BigFloat::from_double(-0.4375, wb), BigFloat::from_double(-0.3125, wb));
    for (size_t i = 0; i < fs.size(); ++i) {
        const FunctionExpansion& f = fs[i];
        TermAtPrec term = [&f, &ztest](long n, mpfr_prec_t bits) {
            return f.residue(n, bits) / (f.pole(n, bits) - ztest.to_prec(bits));
        };
        Routed r = route_series(term, f.n0, ctx);
        SeriesStat st;
        st.label = std::string("check/") + tag + std::to_string(i + 1);
        st.terms_used = r.res.terms_used;
        st.strategy = r.res.strategy;
        st.tail_estimate = r.res.tail_estimate;
        st.converged = r.res.converged && !r.res.diverging;
        stats.push_back(st);
        if (!st.converged)
            throw NotConverged("expansion series did not converge at the consistency point");
        BigComplex closed = f.closed_form(ztest, ctx);
        BigFloat tol = class_tolerance(f.decay_class, ctx);
        if (abs(r.res.value - closed) > tol * (abs(closed) + 1L))
            throw DegenerateInput("expansion series and closed form disagree at the test point");
    }
}

void push_stat(std::vector<SeriesStat>& stats, const std::string& label, const SeriesResult& r) {
    SeriesStat st;
    st.label = label;
    st.terms_used = r.terms_used;
    st.strategy = r.strategy;
    st.tail_estimate = r.tail_estimate;
    st.converged = r.converged && !r.diverging;
    stats.push_back(st);
}

} // namespace

VerificationReport theorem5_eval(const std::vector<FunctionExpansion>& fs,
                                 const std::vector<BigComplex>& xs,
                                 const std::vector<BigComplex>& as_, const BigComplex& t,
                                 const PrecisionContext& ctx) {
    size_t M = fs.size();
    require_shape(M >= 1, "theorem5 needs at least one expansion");
    require_shape(xs.size() == M && as_.size() == M,
                  "theorem5 needs xs and as of the same size as fs");
    require_shape(t.is_finite(), "theorem5 needs a finite t");
    for (size_t i = 0; i < M; ++i) {
        require_shape(xs[i].is_finite() && as_[i].is_finite() && !xs[i].is_zero(),
                      "theorem5 needs finite parameters and x_i != 0");
        require_shape(static_cast<bool>(fs[i].residue) && static_cast<bool>(fs[i].pole) &&
                          static_cast<bool>(fs[i].closed_form),
                      "theorem5 expansions need residue, pole, and closed_form");
    }

    detail::EvalCtx ec(ctx);
    mpfr_prec_t wb = ec.wb;

    VerificationReport rep;
    rep.identity_id = "theorem5";
    rep.params.xs = xs;
    rep.params.as_ = as_;
    rep.params.t = t;
    rep.params.M = static_cast<long>(M);
    rep.working_digits = ctx.working_digits();

    const long W = 1000;
    auto values = lattice_tables(fs, xs, as_, W, wb);
    std::vector<long> n0s;
    for (const auto& f : fs) n0s.push_back(f.n0);
    scan_family(values, n0s, t.to_prec(wb), "x_i c_i(n) - x_j c_j(k) != a_j - a_i",
                "x_i c_i(n) + a_i != t", ec.snap, rep.hypothesis);
    rep.hypothesis.checked_up_to = W;
    if (!rep.hypothesis.ok) {
        rep.pass = false;
        return rep;
    }

    check_expansions(fs, "f", ctx, rep.series_stats);

    BigComplex lhs = BigComplex::from_long(1, wb);
    for (size_t i = 0; i < M; ++i)
        lhs = lhs * fs[i].closed_form((t.to_prec(wb) - as_[i].to_prec(wb)) / xs[i].to_prec(wb),
                                      ctx);

    bool ok = true;
    DecayClass worst = DecayClass::exponential;
    BigComplex rhs = BigComplex::from_long(0, wb);
    for (size_t i = 0; i < M; ++i) {
        TermAtPrec term = [&, i](long n, mpfr_prec_t bits) {
            PrecisionContext cb = ctx_at(ctx, bits);
            BigComplex P = xs[i].to_prec(bits) * fs[i].pole(n, bits) + as_[i].to_prec(bits);
            BigComplex val = fs[i].residue(n, bits) / (P - t.to_prec(bits));
            for (size_t j = 0; j < M; ++j) {
                if (j == i) continue;
                val = val * fs[j].closed_form((P - as_[j].to_prec(bits)) / xs[j].to_prec(bits),
                                              cb);
            }
            return val;
        };
        std::string label = "rhs/f" + std::to_string(i + 1);
        Routed r = route_series(term, fs[i].n0, ctx);
        bool good = r.res.converged && !r.res.diverging;

        if (!good && M == 2) {
            // Exchanged order: with absolute convergence the i-th double sum
            // regroups over the other family's lattice,
            //   x_j sum_k R_j(k) [f_i(z_i) - f_i((P_j(k) - a_i)/x_i)] / (P_j(k) - t),
            // whose terms are smooth where the printed order is not.
            size_t j = 1 - i;
            TermAtPrec ex = [&, i, j](long k, mpfr_prec_t bits) {
                PrecisionContext cb = ctx_at(ctx, bits);
                BigComplex Pj = xs[j].to_prec(bits) * fs[j].pole(k, bits) + as_[j].to_prec(bits);
                BigComplex zi =
                    (t.to_prec(bits) - as_[i].to_prec(bits)) / xs[i].to_prec(bits);
                BigComplex vi = (Pj - as_[i].to_prec(bits)) / xs[i].to_prec(bits);
                return fs[j].residue(k, bits) *
                       (fs[i].closed_form(zi, cb) - fs[i].closed_form(vi, cb)) /
                       (Pj - t.to_prec(bits));
            };
            Routed rx = route_series(ex, fs[j].n0, ctx);
            if (rx.res.converged && !rx.res.diverging) {
                push_stat(rep.series_stats, label + "x", rx.res);
                widen(worst, rx.cls);
                rhs = rhs + xs[j].to_prec(wb) * rx.res.value;
                continue;
            }
        }

        push_stat(rep.series_stats, label, r.res);
        widen(worst, r.cls);
        ok = ok && good;
        rhs = rhs + xs[i].to_prec(wb) * r.res.value;
    }

    detail::finish_report(rep, lhs, rhs, worst, ok, ctx);
    return rep;
}

VerificationReport theorem6_eval(const std::vector<FunctionExpansion>& fs,
                                 const std::vector<FunctionExpansion>& gs,
                                 const std::vector<BigComplex>& xs,
                                 const std::vector<BigComplex>& as_,
                                 const std::vector<BigComplex>& ys,
                                 const std::vector<BigComplex>& bs, const BigComplex& t,
                                 const PrecisionContext& ctx) {
    if (!t.is_finite() || abs(t) <= tenpow(-ctx.working_digits(), t.prec()))
        throw DomainError("theorem6 needs t != 0: 1/t enters the g arguments");
    if (gs.empty()) return theorem5_eval(fs, xs, as_, t, ctx);

    size_t M = fs.size(), N = gs.size();
    require_shape(M >= 1, "theorem6 needs at least one f expansion");
    require_shape(xs.size() == M && as_.size() == M,
                  "theorem6 needs xs and as of the same size as fs");
    require_shape(ys.size() == N && bs.size() == N,
                  "theorem6 needs ys and bs of the same size as gs");
    for (size_t i = 0; i < M; ++i)
        require_shape(xs[i].is_finite() && as_[i].is_finite() && !xs[i].is_zero(),
                      "theorem6 needs finite parameters and x_i != 0");
    for (size_t i = 0; i < N; ++i)
        require_shape(ys[i].is_finite() && bs[i].is_finite() && !ys[i].is_zero(),
                      "theorem6 needs finite parameters and y_i != 0");

    detail::EvalCtx ec(ctx);
    mpfr_prec_t wb = ec.wb;

    VerificationReport rep;
    rep.identity_id = "theorem6";
    rep.params.xs = xs;
    rep.params.as_ = as_;
    rep.params.ys = ys;
    rep.params.bs = bs;
    rep.params.t = t;
    rep.params.M = static_cast<long>(M);
    rep.params.N = static_cast<long>(N);
    rep.working_digits = ctx.working_digits();

    BigComplex tw = t.to_prec(wb);
    BigComplex rt = 1L / tw;

    const long W = 1000;
    auto xv = lattice_tables(fs, xs, as_, W, wb);
    auto yv = lattice_tables(gs, ys, bs, W, wb);
    std::vector<long> xn0, yn0;
    for (const auto& f : fs) xn0.push_back(f.n0);
    for (const auto& g : gs) yn0.push_back(g.n0);
    scan_family(xv, xn0, tw, "x_i c_i(n) - x_j c_j(k) != a_j - a_i",
                "x_i c_i(n) + a_i != t", ec.snap, rep.hypothesis);
    scan_family(yv, yn0, rt, "y_i l_i(n) - y_j l_j(k) != b_j - b_i",
                "y_i l_i(n) + b_i != 1/t", ec.snap, rep.hypothesis);
    BigComplex zero = BigComplex::from_long(0, wb);
    scan_family(yv, yn0, zero, "", "y_i l_i(n) + b_i != 0", ec.snap, rep.hypothesis, false);
    rep.hypothesis.checked_up_to = W;
    if (!rep.hypothesis.ok) {
        rep.pass = false;
        return rep;
    }

    check_expansions(fs, "f", ctx, rep.series_stats);
    check_expansions(gs, "g", ctx, rep.series_stats);

    BigComplex lhs = BigComplex::from_long(1, wb);
    for (size_t i = 0; i < M; ++i)
        lhs = lhs * fs[i].closed_form((tw - as_[i].to_prec(wb)) / xs[i].to_prec(wb), ctx);
    for (size_t i = 0; i < N; ++i)
        lhs = lhs * gs[i].closed_form((rt - bs[i].to_prec(wb)) / ys[i].to_prec(wb), ctx);

    bool ok = true;
    DecayClass worst = DecayClass::exponential;
    BigComplex rhs = BigComplex::from_long(0, wb);

    for (size_t i = 0; i < M; ++i) {
        TermAtPrec term = [&, i](long n, mpfr_prec_t bits) {
            PrecisionContext cb = ctx_at(ctx, bits);
            BigComplex P = xs[i].to_prec(bits) * fs[i].pole(n, bits) + as_[i].to_prec(bits);
            BigComplex val = fs[i].residue(n, bits) / (P - t.to_prec(bits));
            for (size_t j = 0; j < N; ++j)
                val = val * gs[j].closed_form((1L / P - bs[j].to_prec(bits)) /
                                                  ys[j].to_prec(bits),
                                              cb);
            for (size_t j = 0; j < M; ++j) {
                if (j == i) continue;
                val = val * fs[j].closed_form((P - as_[j].to_prec(bits)) / xs[j].to_prec(bits),
                                              cb);
            }
            return val;
        };
        Routed r = route_series(term, fs[i].n0, ctx);
        push_stat(rep.series_stats, "rhs/f" + std::to_string(i + 1), r.res);
        widen(worst, r.cls);
        ok = ok && r.res.converged && !r.res.diverging;
        rhs = rhs + xs[i].to_prec(wb) * r.res.value;
    }

    for (size_t i = 0; i < N; ++i) {
        TermAtPrec term = [&, i](long n, mpfr_prec_t bits) {
            PrecisionContext cb = ctx_at(ctx, bits);
            BigComplex Q = ys[i].to_prec(bits) * gs[i].pole(n, bits) + bs[i].to_prec(bits);
            BigComplex val = gs[i].residue(n, bits) / (Q * (Q * t.to_prec(bits) - 1L));
            for (size_t j = 0; j < M; ++j)
                val = val * fs[j].closed_form((1L / Q - as_[j].to_prec(bits)) /
                                                  xs[j].to_prec(bits),
                                              cb);
            for (size_t j = 0; j < N; ++j) {
                if (j == i) continue;
                val = val * gs[j].closed_form((Q - bs[j].to_prec(bits)) / ys[j].to_prec(bits),
                                              cb);
            }
            return val;
        };
        Routed r = route_series(term, gs[i].n0, ctx);
        push_stat(rep.series_stats, "rhs/g" + std::to_string(i + 1), r.res);
        widen(worst, r.cls);
        ok = ok && r.res.converged && !r.res.diverging;
        rhs = rhs + ys[i].to_prec(wb) * r.res.value;
    }

    detail::finish_report(rep, lhs, rhs, worst, ok, ctx);
    return rep;
}

namespace {

BigFloat zeta_real(long s, mpfr_prec_t bits) {
    return hurwitz_tail(BigFloat::from_long(s, bits), 1, bits);
}

// Sum over n >= 1 of 1/(n^2 - z).  The closed form cancels catastrophically
// as z -> 0, so small arguments switch to the zeta power series.
BigComplex inv_squares_closed(const BigComplex& z0, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits();
    BigComplex z = z0.to_prec(wb);
    if (abs(z) <= BigFloat::from_double(1e-6, wb)) {
        BigComplex acc = BigComplex::from_long(0, wb);
        BigComplex zp = BigComplex::from_long(1, wb);
        BigFloat eps = tenpow(-(ctx.working_digits() + 5), wb);
        for (long j = 0; j < 48; ++j) {
            BigComplex term = zp * zeta_real(2 * j + 2, wb);
            acc = acc + term;
            if (abs(term) <= eps) break;
            zp = zp * z;
        }
        return acc;
    }
    BigComplex u = sqrt(z);
    BigComplex pic = BigComplex(BigFloat::pi(wb));
    return (1L - pic * u * cot(pic * u)) / (2L * z);
}

BigComplex inv_fourth_closed(const BigComplex& z0, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits();
    BigComplex z = z0.to_prec(wb);
    if (abs(z) <= BigFloat::from_double(1e-6, wb)) {
        BigComplex acc = BigComplex::from_long(0, wb);
        BigComplex zp = BigComplex::from_long(1, wb);
        BigFloat eps = tenpow(-(ctx.working_digits() + 5), wb);
        for (long j = 0; j < 48; ++j) {
            BigComplex term = zp * zeta_real(4 * j + 4, wb);
            acc = acc + term;
            if (abs(term) <= eps) break;
            zp = zp * z;
        }
        return acc;
    }
    BigComplex s = sqrt(z);
    return (inv_squares_closed(s, ctx) - inv_squares_closed(0L - s, ctx)) / (2L * s);
}

} // namespace

FunctionExpansion expansion_cos_kernel(const BigComplex& theta) {
    FunctionExpansion f;
    BigComplex th = theta;
    f.residue = [th](long n, mpfr_prec_t bits) {
        BigComplex c = cos(th.to_prec(bits) * n);
        return n % 2 == 0 ? 0L - c : c;
    };
    f.pole = [](long n, mpfr_prec_t bits) { return BigComplex::from_long(n, bits) * n; };
    f.closed_form = [th](const BigComplex& z, const PrecisionContext& cx) {
        mpfr_prec_t wb = cx.working_bits();
        BigComplex zz = z.to_prec(wb);
        BigComplex one = BigComplex::from_long(1, wb);
        if (abs(zz) <= tenpow(-(cx.working_digits() - 10), wb))
            return cos_kernel_limit_at_zero(one, th.to_prec(wb), cx);
        return cos_kernel_closed(sqrt(zz), one, th.to_prec(wb), cx);
    };
    double td = std::abs(theta.re().to_double());
    if (td < 1e-9)
        f.decay_class = DecayClass::alternating_poly;
    else
        f.decay_class = DecayClass::monotone_poly;
    f.n0 = 1;
    return f;
}

FunctionExpansion expansion_sin_kernel(const BigComplex& theta) {
    FunctionExpansion f;
    BigComplex th = theta;
    f.residue = [th](long n, mpfr_prec_t bits) {
        BigComplex s = sin(th.to_prec(bits) * (2 * n + 1));
        return n % 2 == 0 ? s : 0L - s;
    };
    f.pole = [](long n, mpfr_prec_t bits) {
        return BigComplex::from_long(2 * n + 1, bits) * (2 * n + 1);
    };
    f.closed_form = [th](const BigComplex& z, const PrecisionContext& cx) {
        mpfr_prec_t wb = cx.working_bits();
        BigComplex one = BigComplex::from_long(1, wb);
        return sin_kernel_closed(sqrt(z.to_prec(wb)), one, th.to_prec(wb), cx);
    };
    f.decay_class = DecayClass::monotone_poly;
    f.n0 = 0;
    return f;
}

FunctionExpansion expansion_inverse_squares() {
    FunctionExpansion f;
    f.residue = [](long, mpfr_prec_t bits) { return BigComplex::from_long(1, bits); };
    f.pole = [](long n, mpfr_prec_t bits) { return BigComplex::from_long(n, bits) * n; };
    f.closed_form = inv_squares_closed;
    f.decay_class = DecayClass::monotone_poly;
    f.n0 = 1;
    return f;
}

FunctionExpansion expansion_inverse_fourth() {
    FunctionExpansion f;
    f.residue = [](long, mpfr_prec_t bits) { return BigComplex::from_long(1, bits); };
    f.pole = [](long n, mpfr_prec_t bits) {
        BigComplex m = BigComplex::from_long(n, bits);
        return m * m * m * n;
    };
    f.closed_form = inv_fourth_closed;
    f.decay_class = DecayClass::monotone_poly;
    f.n0 = 1;
    return f;
}

} // namespace ramv
