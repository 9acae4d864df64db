#include "ramv/series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ramv/bernoulli.hpp"
#include "ramv/bigrational.hpp"
#include "ramv/errors.hpp"
#include "ramv/quadrature.hpp"

namespace ramv {

BigFloat class_tolerance(DecayClass c, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits();
    switch (c) {
        case DecayClass::exponential: return tenpow(-(ctx.target_digits - 5), wb);
        case DecayClass::alternating_poly: return tenpow(-20, wb);
        case DecayClass::monotone_poly: return tenpow(-12, wb);
    }
    return tenpow(-12, wb);
}

const char* decay_class_name(DecayClass c) {
    switch (c) {
        case DecayClass::exponential: return "exponential";
        case DecayClass::alternating_poly: return "alternating_poly";
        case DecayClass::monotone_poly: return "monotone_poly";
    }
    return "monotone_poly";
}

SeriesResult sum_direct(const TermFn& term, long n0, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits(ctx.max_terms_direct);
    BigFloat eps = tenpow(-ctx.working_digits(), wb);
    BigFloat one = BigFloat::from_long(1, wb);

    SeriesResult r;
    r.strategy = "direct";
    BigComplex s(wb);
    BigFloat prev_mag = BigFloat::from_long(0, wb);
    BigFloat last_mag = BigFloat::from_long(0, wb);
    BigFloat last_ratio = BigFloat::from_long(0, wb);
    int small_run = 0;
    int grow_run = 0;
    bool stopped_small = false;

    for (long n = n0; n - n0 < ctx.max_terms_direct; ++n) {
        BigComplex t = term(n);
        s += t;
        ++r.terms_used;
        BigFloat m = abs(t);
        if (m <= eps * max(one, abs(s))) {
            if (++small_run >= 3) {
                stopped_small = true;
                break;
            }
        } else {
            small_run = 0;
        }
        if (r.terms_used > 1 && m > prev_mag) {
            if (++grow_run >= 25 && r.terms_used >= 40) {
                r.value = s;
                r.tail_estimate = m;
                r.diverging = true;
                return r;
            }
        } else {
            grow_run = 0;
        }
        if (r.terms_used > 1 && !prev_mag.is_zero()) last_ratio = m / prev_mag;
        prev_mag = m;
        last_mag = m;
    }

    r.value = s;
    if (stopped_small) {
        // Continue the last observed decay geometrically for the tail bound.
        BigFloat ratio = min(last_ratio, BigFloat::from_string("0.95", wb));
        if (ratio.is_negative()) ratio = BigFloat::from_long(0, wb);
        r.tail_estimate = last_mag * ratio / (one - ratio) + 3L * eps * max(one, abs(s));
        r.converged = true;
    } else {
        // Cap hit; for a power tail with p >= 2 the remainder is about n * last.
        r.tail_estimate = last_mag * r.terms_used;
        r.converged = false;
    }
    return r;
}

SeriesResult sum_cvz(const TermFn& term, long n0, const PrecisionContext& ctx) {
    int wd = ctx.working_digits();
    mpfr_prec_t wb = ctx.working_bits();
    // d = (3+sqrt 8)^n buys about 1.31 digits per term.
    long n = static_cast<long>(wd * 1.31) + 10;
    if (n > ctx.max_terms_accelerated) n = ctx.max_terms_accelerated;
    if (n < 12) n = 12;

    std::vector<BigComplex> a; // a_k = (-1)^k t_{n0+k}; one-signed when t alternates
    a.reserve(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) {
        BigComplex t = term(n0 + k);
        if ((k & 1L) != 0) t = -t;
        a.push_back(t);
    }

    auto run = [&](long m) {
        BigFloat d = pow_si(BigFloat::from_long(3, wb) + sqrt(BigFloat::from_long(8, wb)), m);
        d = (d + 1L / d) / 2L;
        BigFloat b = BigFloat::from_long(-1, wb);
        BigFloat c = -d;
        BigComplex s(wb);
        for (long k = 0; k < m; ++k) {
            c = b - c;
            s += a[static_cast<size_t>(k)] * c;
            b = b * ((k + m) * (k - m) * 2) / ((2 * k + 1) * (k + 1));
        }
        return s / d;
    };

    SeriesResult r;
    r.strategy = "cvz";
    r.terms_used = n;
    BigComplex full = run(n);
    BigComplex check = run(n - 8);
    r.value = full;
    r.tail_estimate = abs(full - check) + tenpow(-(wd - 1), wb) * (abs(full) + 1L);
    r.converged = r.tail_estimate <= tenpow(-ctx.target_digits, wb) * (abs(full) + 1L);
    return r;
}

BigFloat hurwitz_tail(const BigFloat& s, long from, mpfr_prec_t bits) {
    mpfr_prec_t wb = bits + 32;
    int digits = static_cast<int>(bits * 0.30103);
    BigFloat eps = tenpow(-(digits + 4), wb);
    BigFloat sw = s.to_prec(wb);

    long a = from < 32 ? 32 : from;
    BigFloat best = BigFloat::from_long(0, wb);
    for (int attempt = 0; attempt < 6; ++attempt, a *= 2) {
        BigFloat head = BigFloat::from_long(0, wb);
        for (long k = from; k < a; ++k) head += pow(BigFloat::from_long(k, wb), -sw);

        BigFloat A = BigFloat::from_long(a, wb);
        BigFloat apow = pow(A, -sw);
        BigFloat tail = apow * A / (sw - 1L) + apow / 2L;

        // factor_j = (s)_{2j-1} / (2j)! * a^{-s-2j+1}, stepped incrementally.
        BigFloat factor = sw * apow / (A * 2L);
        BigFloat prev_mag = tenpow(digits + 40, wb);
        bool ok = false;
        for (long j = 1; j <= 48; ++j) {
            BigFloat t = bernoulli(static_cast<unsigned long>(2 * j)).to_bigfloat(wb) * factor;
            BigFloat m = abs(t);
            if (m >= prev_mag) break; // asymptotic turn; retry with larger a
            tail += t;
            prev_mag = m;
            if (m <= eps * (abs(tail) + abs(head) + 1L)) {
                ok = true;
                break;
            }
            factor = factor * (sw + (2 * j - 1)) * (sw + 2 * j) / ((2 * j + 1) * (2 * j + 2)) / (A * A);
        }
        best = head + tail;
        if (ok) break;
    }
    return best.to_prec(bits);
}

SeriesResult sum_em_taylor(const StructuredTerm& f, long n0, const PrecisionContext& ctx,
                           long min_start) {
    if (!f.at_point || !f.expand)
        throw std::invalid_argument("sum_em_taylor needs at_point and expand");
    int wd = ctx.working_digits();
    mpfr_prec_t wb = ctx.working_bits();
    BigFloat eps = tenpow(-(wd - 2), wb);
    const size_t K = 64;

    long N = n0 + 16;
    if (N < 48) N = 48;
    if (N < min_start) N = min_start;

    SeriesResult best;
    best.strategy = "em_taylor";
    BigFloat best_est = tenpow(wd, wb);
    for (int attempt = 0; attempt < 4; ++attempt) {
        BigComplex head(wb);
        for (long k = n0; k < N; ++k) head += f.at(k);

        TaylorSeries T = f.expand(TaylorSeries::variable(BigComplex::from_long(N, wb), K));

        // Correction sum truncated at the smallest term of the asymptotic tail.
        BigComplex corr(wb);
        BigFloat prev_mag = tenpow(wd + 40, wb);
        BigFloat cmin = prev_mag;
        size_t used = 0;
        for (size_t j = 1; 2 * j - 1 < K; ++j) {
            BigComplex t =
                T.coeff(2 * j - 1) * bernoulli(2 * j).to_bigfloat(wb) / static_cast<long>(2 * j);
            BigFloat m = abs(t);
            if (j >= 3 && m >= prev_mag) {
                cmin = prev_mag;
                break;
            }
            corr += t;
            ++used;
            prev_mag = m;
            cmin = m;
            if (m <= eps) break;
        }

        BigFloat qerr = BigFloat::from_long(0, wb);
        BigComplex I = integrate01(
            [&](const BigFloat& t, const BigFloat& omt) {
                BigFloat sreal = BigFloat::from_long(N, wb) + t / omt;
                return f.at_point(BigComplex(sreal)) / (omt * omt);
            },
            wb, wd + 2, &qerr);

        BigComplex total = head + I + T.coeff(0) / 2L - corr;
        BigFloat est = cmin * 2L + qerr;
        SeriesResult r;
        r.strategy = "em_taylor";
        r.value = total;
        r.terms_used = N - n0 + static_cast<long>(used);
        r.tail_estimate = est;
        r.converged = est <= eps * (abs(total) + 1L);
        if (r.converged) return r;
        if (est < best_est) {
            best = r;
            best_est = est;
        }
        if (2 * N > ctx.max_terms_accelerated) break;
        N *= 2;
    }
    return best;
}

namespace {

// Exact monomial coefficients of the Lagrange basis over rational nodes.
// coeff[i][j] is the u^j coefficient of l_i(u) with l_i(u_k) = delta_ik.
std::vector<std::vector<BigRational>> lagrange_basis(const std::vector<BigRational>& u) {
    size_t p = u.size();
    std::vector<BigRational> P(1, BigRational(1)); // prod (x - u_i), low degree first
    for (size_t i = 0; i < p; ++i) {
        std::vector<BigRational> Q(P.size() + 1);
        for (size_t k = 0; k < P.size(); ++k) {
            Q[k + 1] = Q[k + 1] + P[k];
            Q[k] = Q[k] - u[i] * P[k];
        }
        P = Q;
    }
    std::vector<std::vector<BigRational>> basis(p);
    for (size_t i = 0; i < p; ++i) {
        // Synthetic division by (x - u_i): q[k] = P[k+1] + u_i q[k+1].
        std::vector<BigRational> q(p);
        q[p - 1] = P[p];
        for (size_t k = p - 1; k >= 1; --k) q[k - 1] = P[k] + u[i] * q[k];
        BigRational denom = q[p - 1];
        for (size_t k = p - 1; k >= 1; --k) denom = denom * u[i] + q[k - 1];
        for (size_t j = 0; j < p; ++j) q[j] = q[j] / denom;
        basis[i] = std::move(q);
    }
    return basis;
}

double mag_double(const BigComplex& v) { return abs(v).to_double(); }

} // namespace

SeriesResult sum_em_fit(const TermAtPrec& f, long n0, const PrecisionContext& ctx,
                        double s0_hint) {
    int wd = ctx.working_digits();
    mpfr_prec_t wb = ctx.working_bits();
    const size_t p = 12;

    long N = n0 + 64;
    if (N < 512) N = 512;
    if (N + 2 * static_cast<long>(p) > ctx.max_terms_accelerated) {
        N = ctx.max_terms_accelerated - 2 * static_cast<long>(p);
        if (N < n0 + 16) N = n0 + 16;
    }

    // Leading decay exponent from the term magnitudes, snapped to half-integers.
    double s0 = s0_hint;
    if (s0 <= 0.0) {
        long ka = N - 64 > n0 ? N - 64 : n0;
        BigComplex ta = f(ka, wb);
        BigComplex tb = f(N, wb);
        if (ta.is_zero() || tb.is_zero()) {
            s0 = 3.0;
        } else {
            double la = std::log(mag_double(ta));
            double lb = std::log(mag_double(tb));
            s0 = (la - lb) / std::log(static_cast<double>(N) / static_cast<double>(ka));
        }
    }
    long s0x2 = std::lround(s0 * 2.0);
    if (s0x2 < 3) s0x2 = 3;
    if (s0x2 > 120) s0x2 = 120;

    // The extrapolation weights grow like N^(p-1); elevate to absorb that.
    mpfr_prec_t eb =
        wb + static_cast<mpfr_prec_t>((p - 1) * std::log2(static_cast<double>(N + p))) + 100;
    BigFloat s0f = BigRational(s0x2, 2).to_bigfloat(eb);

    mpfr_prec_t hb = ctx.working_bits(N);
    BigComplex head(hb);
    for (long k = n0; k < N; ++k) head += f(k, hb);

    auto fit_tail = [&](long from) {
        std::vector<BigRational> u;
        u.reserve(p);
        for (size_t i = 0; i < p; ++i) u.push_back(BigRational(1, from + static_cast<long>(i)));
        auto basis = lagrange_basis(u);
        std::vector<BigFloat> Z;
        Z.reserve(p);
        for (size_t j = 0; j < p; ++j)
            Z.push_back(hurwitz_tail(s0f + static_cast<long>(j), from, eb));
        BigComplex tail(eb);
        for (size_t i = 0; i < p; ++i) {
            BigFloat M = BigFloat::from_long(0, eb);
            for (size_t j = 0; j < p; ++j) M += basis[i][j].to_bigfloat(eb) * Z[j];
            long ki = from + static_cast<long>(i);
            BigComplex xi = f(ki, eb) * pow(BigFloat::from_long(ki, eb), s0f);
            tail += xi * M;
        }
        return tail;
    };

    BigComplex tailN = fit_tail(N);
    BigComplex value = head + tailN;

    SeriesResult r;
    r.strategy = "em_fit";
    r.terms_used = N - n0 + 2 * static_cast<long>(p);

    long N2 = N - (N - n0) / 4;
    if (N - N2 >= 2 * static_cast<long>(p)) {
        BigComplex mid(eb);
        for (long k = N2; k < N; ++k) mid += f(k, eb);
        BigComplex tailN2 = fit_tail(N2);
        r.terms_used += (N - N2) + static_cast<long>(p);
        r.tail_estimate =
            abs(mid + tailN - tailN2) + tenpow(-(wd + 6), wb) * (abs(value) + 1L);
    } else {
        r.tail_estimate = tenpow(-11, wb) * (abs(value) + 1L);
    }
    r.value = value.to_prec(wb);
    r.converged =
        r.tail_estimate * 4L <= tenpow(-12, wb) * (abs(value) + 1L);
    return r;
}

SeriesResult sum_oscillatory(const TermAtPrec& f, const BigComplex& z, long n0,
                             const PrecisionContext& ctx, long min_start) {
    int wd = ctx.working_digits();
    mpfr_prec_t wb = ctx.working_bits();
    BigFloat eps = tenpow(-(wd - 2), wb);

    double gap = mag_double(z - BigComplex::from_long(1, z.prec()));
    if (gap < 1e-12) throw std::invalid_argument("sum_oscillatory needs z != 1");
    double rho = mag_double(z) / gap;

    long m = static_cast<long>(std::ceil(2.4 * (wd + 5)));
    long cap = ctx.max_terms_accelerated;
    if (static_cast<double>(m) * (rho + 1.3) > static_cast<double>(cap))
        m = static_cast<long>(static_cast<double>(cap) / (rho + 1.3));
    if (m < 8) m = 8;
    long N = n0 + 32;
    long span = static_cast<long>(std::ceil(rho * static_cast<double>(m))) + 4;
    if (span > 32) N = n0 + span;
    if (N < min_start) N = min_start;
    if (N + m - n0 > cap) N = n0 + cap - m;
    if (N < n0 + 1) N = n0 + 1;

    long extra_bits =
        static_cast<long>(std::ceil(m * std::log2(static_cast<double>(N - n0 + m + 2)))) + 96;
    mpfr_prec_t hp = wb + extra_bits;

    // Head at moderate precision; only the difference table needs elevation.
    mpfr_prec_t hb = wb + 64;
    BigComplex zb = z.to_prec(hb);
    BigComplex zk = pow_si(zb, n0);
    BigComplex head(hb);
    for (long k = n0; k < N; ++k) {
        head += zk * f(k, hb);
        zk *= zb;
    }

    // Difference table Delta^j f(N) in place at elevated precision.
    std::vector<BigComplex> v;
    v.reserve(static_cast<size_t>(m) + 1);
    for (long k = 0; k <= m; ++k) v.push_back(f(N + k, hp));
    std::vector<BigComplex> d;
    d.reserve(static_cast<size_t>(m) + 1);
    d.push_back(v[0]);
    for (long j = 1; j <= m; ++j) {
        for (long k = 0; k <= m - j; ++k) v[static_cast<size_t>(k)] =
            v[static_cast<size_t>(k) + 1] - v[static_cast<size_t>(k)];
        d.push_back(v[0]);
    }

    BigComplex zh = z.to_prec(hp);
    BigComplex A = BigComplex::from_long(-1, hp) / (zh - 1L);
    BigComplex B = -zh / (zh - 1L);
    BigComplex pref = A * pow_si(zh, N);

    // tail = pref * sum_j B^j d_j, truncated at the globally smallest term.
    std::vector<BigComplex> partial;
    partial.reserve(d.size());
    std::vector<double> mags;
    mags.reserve(d.size());
    BigComplex S(hp);
    BigComplex Bj = BigComplex::from_long(1, hp);
    for (size_t j = 0; j < d.size(); ++j) {
        BigComplex t = pref * Bj * d[j];
        S += t;
        partial.push_back(S);
        mags.push_back(mag_double(t));
        Bj *= B;
    }
    size_t jstar = 0;
    for (size_t j = 1; j < mags.size(); ++j)
        if (mags[j] < mags[jstar]) jstar = j;

    BigComplex total = head + partial[jstar];
    SeriesResult r;
    r.strategy = "abel";
    r.value = total.to_prec(wb);
    r.terms_used = (N - n0) + m + 1;
    r.tail_estimate =
        BigFloat::from_double(mags[jstar] * (1.0 + rho) * 2.0, wb) + tenpow(-(wd + 4), wb);
    r.converged = r.tail_estimate <= eps * (abs(total) + 1L);
    return r;
}

SeriesResult sum_auto(const StructuredTerm& f, long n0, const PrecisionContext& ctx,
                      DecayClass* cls) {
    mpfr_prec_t wb = ctx.working_bits();
    const int P = 48;
    std::vector<BigComplex> t;
    t.reserve(P);
    for (int k = 0; k < P; ++k) t.push_back(f.at(n0 + k));

    bool all_zero = true;
    for (const auto& v : t)
        if (!v.is_zero()) all_zero = false;
    if (all_zero) {
        SeriesResult r;
        r.strategy = "direct";
        r.value = BigComplex(wb);
        r.terms_used = P;
        r.tail_estimate = BigFloat::from_long(0, wb);
        r.converged = true;
        if (cls) *cls = DecayClass::exponential;
        return r;
    }

    double logsum = 0.0;
    int cnt = 0;
    bool alternating = true;
    bool monotone = true;
    for (int k = P / 2; k + 1 < P; ++k) {
        if (t[k].is_zero() || t[k + 1].is_zero()) {
            alternating = false;
            monotone = false;
            continue;
        }
        BigComplex rq = t[k + 1] / t[k];
        double rr = rq.re().to_double();
        double ri = rq.im().to_double();
        double mag = std::hypot(rr, ri);
        logsum += std::log(mag);
        ++cnt;
        if (!(rr < 0.0 && std::fabs(ri) <= 0.25 * mag)) alternating = false;
        if (!(rr > 0.0 && std::fabs(ri) <= 0.25 * mag)) monotone = false;
    }

    if (cnt == 0) {
        if (cls) *cls = DecayClass::monotone_poly;
        return sum_direct(f.at, n0, ctx);
    }
    double geo = std::exp(logsum / cnt);

    if (geo <= 0.92) {
        if (cls) *cls = DecayClass::exponential;
        return sum_direct(f.at, n0, ctx);
    }
    if (alternating) {
        if (cls) *cls = DecayClass::alternating_poly;
        if (f.at_prec) {
            TermAtPrec g = [&f](long k, mpfr_prec_t b) {
                BigComplex v = f.at_prec(k, b);
                return (k & 1L) != 0 ? -v : v;
            };
            return sum_oscillatory(g, BigComplex::from_long(-1, wb), n0, ctx);
        }
        return sum_cvz(f.at, n0, ctx);
    }
    if (monotone) {
        if (cls) *cls = DecayClass::monotone_poly;
        if (f.at_point && f.expand) {
            SeriesResult r = sum_em_taylor(f, n0, ctx);
            if (r.converged || !f.at_prec) return r;
            SeriesResult r2 = sum_em_fit(f.at_prec, n0, ctx);
            return r2.tail_estimate < r.tail_estimate ? r2 : r;
        }
        if (f.at_prec) return sum_em_fit(f.at_prec, n0, ctx);
        TermAtPrec g = [&f](long k, mpfr_prec_t) { return f.at(k); };
        return sum_em_fit(g, n0, ctx);
    }
    if (cls) *cls = DecayClass::monotone_poly;
    return sum_direct(f.at, n0, ctx);
}

SeriesResult sum_series(const TermFn& term, long n0, const PrecisionContext& ctx) {
    switch (ctx.acceleration) {
        case Acceleration::none: return sum_direct(term, n0, ctx);
        case Acceleration::alternating_cvz: return sum_cvz(term, n0, ctx);
        case Acceleration::euler_maclaurin_tail: {
            TermAtPrec wrapped = [&term](long n, mpfr_prec_t) { return term(n); };
            return sum_em_fit(wrapped, n0, ctx, 0.0);
        }
    }
    return sum_direct(term, n0, ctx);
}

} // namespace ramv
