#include "eval_common.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ramv/errors.hpp"

namespace ramv {
namespace detail {

namespace {

// Elevation ceiling mirroring the accelerated engines' maximal internal
// demand, so at_prec can honor every precision request they make.
mpfr_prec_t eval_hp(const PrecisionContext& ctx) {
    long m = static_cast<long>(std::ceil(2.4 * (ctx.working_digits() + 5)));
    double lg = std::log2(static_cast<double>(ctx.max_terms_accelerated + m + 2));
    return ctx.working_bits() + static_cast<mpfr_prec_t>(m * lg) + 224;
}

int decay_rank(DecayClass c) {
    switch (c) {
    case DecayClass::exponential: return 0;
    case DecayClass::alternating_poly: return 1;
    case DecayClass::monotone_poly: return 2;
    }
    return 2;
}

// Least-squares slope of log10 |term| over [lo, lo + len); false when the
// window has too few usable magnitudes to be trusted.
bool window_slope(const std::function<BigComplex(long)>& term, long lo, long len, double& slope) {
    std::vector<double> xs, ys;
    for (long n = lo; n < lo + len; ++n) {
        BigComplex t;
        try {
            t = term(n);
        } catch (...) {
            return false;
        }
        if (!t.is_finite()) return false;
        BigFloat a = abs(t);
        if (a.is_zero()) continue;
        double d = a.to_double();
        double ell = (d > 0 && std::isfinite(d)) ? std::log10(d)
                                                 : static_cast<double>(a.mag10());
        xs.push_back(static_cast<double>(n));
        ys.push_back(ell);
    }
    if (xs.size() < 8) return false;
    // Oscillating weights and factor sines leave dust and deepening near-zeros
    // well below the envelope; fitting through them fakes a steep slope.  The
    // fit therefore runs over per-block maxima, which track the envelope only.
    std::vector<double> bx, by;
    for (size_t b = 0; b * 4 < xs.size(); ++b) {
        size_t hi = std::min(xs.size(), b * 4 + 4);
        double mx = xs[b * 4], my = ys[b * 4];
        for (size_t i = b * 4; i < hi; ++i) {
            if (ys[i] > my) {
                my = ys[i];
                mx = xs[i];
            }
        }
        bx.push_back(mx);
        by.push_back(my);
    }
    xs = std::move(bx);
    ys = std::move(by);
    if (xs.size() < 5) return false;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double k = static_cast<double>(xs.size());
    double denom = k * sxx - sx * sx;
    if (!(denom > 0)) return false;
    slope = (k * sxy - sx * sy) / denom;
    return std::isfinite(slope);
}

} // namespace

EvalCtx::EvalCtx(const PrecisionContext& c)
    : ctx(&c),
      wb(c.working_bits()),
      hb(eval_hp(c)),
      wd(c.working_digits()),
      snap(tenpow(-(c.working_digits() - 10), c.working_bits())),
      phase_snap(tenpow(-(c.working_digits() - 5), c.working_bits())) {}

void widen(DecayClass& worst, DecayClass c) {
    if (decay_rank(c) > decay_rank(worst)) worst = c;
}

Routed route_series(const TermAtPrec& term, long n0, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits();
    TermFn tf = [&term, wb](long n) { return term(n, wb); };

    Routed r;
    if (probe_exponential(tf, n0)) {
        r.res = sum_direct(tf, n0, ctx);
        r.cls = DecayClass::exponential;
        return r;
    }

    BigFloat fuzz = tenpow(-(ctx.working_digits() - 5), wb);
    bool alternating = true;
    int last_sign = 0;
    for (long n = n0; n < n0 + 24 && alternating; ++n) {
        BigComplex v = tf(n);
        if (!v.is_finite() || abs(v.im()) > fuzz * (abs(v) + 1L)) {
            alternating = false;
            break;
        }
        BigFloat re = v.re();
        BigFloat zero = BigFloat::from_long(0, wb);
        int s = re > zero ? 1 : (re < zero ? -1 : 0);
        if (s == 0 || s == last_sign) alternating = false;
        last_sign = s;
    }
    if (alternating) {
        r.res = sum_cvz(tf, n0, ctx);
        r.cls = DecayClass::alternating_poly;
        if (r.res.converged && !r.res.diverging) return r;
    }

    r.res = sum_em_fit(term, n0, ctx);
    r.cls = DecayClass::monotone_poly;
    return r;
}

BigFloat reduce_phase(const BigFloat& w, mpfr_prec_t bits, const BigFloat& snap) {
    BigFloat pi = BigFloat::pi(bits);
    BigFloat twopi = 2L * pi;
    BigFloat x = w.to_prec(bits);
    BigFloat q = round_nearest(x / twopi);
    BigFloat r = x - q * twopi;
    if (r > pi) r = r - twopi;
    if (!(r > 0L - pi)) r = r + twopi;
    if (abs(r) <= snap) return BigFloat::from_long(0, bits);
    if (abs(r - pi) <= snap || abs(r + pi) <= snap) return pi;
    return r;
}

bool probe_exponential(const std::function<BigComplex(long)>& term, long nu0) {
    // A power-law slope decays like 1/n between the windows; an exponential
    // one persists.  Window B well below half of window A certifies the latter.
    double sa = 0, sb = 0;
    if (!window_slope(term, nu0 + 16, 24, sa)) return false;
    if (!window_slope(term, nu0 + 200, 24, sb)) return false;
    return sa < 0 && sb <= -0.01 && sb <= 0.5 * sa;
}

BigComplex eval_outer(const OuterSpec& os, const EvalCtx& ec, std::vector<SeriesStat>& stats,
                      DecayClass& worst, bool& ok) {
    const PrecisionContext& ctx = *ec.ctx;
    if (os.vanishes) {
        SeriesStat st;
        st.label = os.label;
        st.terms_used = 0;
        st.strategy = "vanishes";
        st.tail_estimate = BigFloat::from_long(0, ec.wb);
        st.converged = true;
        stats.push_back(st);
        return BigComplex::from_long(0, ec.wb);
    }

    // Verbatim term: probe, direct path, and the pre-split head all use it.
    auto term = [&os, &ec](long nu) {
        BigComplex v = os.weight_at ? os.weight_at(nu) : BigComplex::from_long(1, ec.wb);
        if (os.R.at_w) v = v * os.R.at_w(BigComplex::from_long(nu, ec.wb));
        for (const auto& f : os.factors) v = v * f.direct_at(nu);
        return v;
    };

    // The piece gens are singular where any factor's sampled argument crosses
    // zero or a near-resonance; the engines must start beyond all of them.
    long K = std::max(os.nu0, os.clearance);
    for (const auto& f : os.factors)
        K = std::max(K, static_cast<long>(std::ceil(f.clearance)) + 1);

    if (probe_exponential(term, K)) {
        SeriesResult r = sum_direct(term, os.nu0, ctx);
        SeriesStat st;
        st.label = os.label + "/direct";
        st.terms_used = r.terms_used;
        st.strategy = r.strategy;
        st.tail_estimate = r.tail_estimate;
        st.converged = r.converged && !r.diverging;
        stats.push_back(st);
        widen(worst, DecayClass::exponential);
        ok = ok && st.converged;
        return (os.prefactor * r.value).to_prec(ec.wb);
    }

    bool can_split = !os.weight.empty();
    for (const auto& f : os.factors) can_split = can_split && f.splittable && !f.pieces.empty();
    if (!can_split)
        throw NotConverged(os.label +
                           ": terms neither decay exponentially nor admit a phase/smooth split");
    if (K + 64 > ctx.max_terms_accelerated)
        throw NotConverged(os.label + ": pole clearance exceeds the accelerated-term budget");

    // Head summed verbatim: below K the individual pieces may blow up even
    // though their sum is finite, so the split only applies to the tail.
    BigComplex head = BigComplex::from_long(0, ec.wb);
    for (long nu = os.nu0; nu < K; ++nu) head = head + term(nu);

    struct Combo {
        BigComplex c_w, c_h;
        BigFloat ph_h;
        std::vector<int> tags;
        std::vector<const SmoothFn*> gens;
    };
    std::vector<Combo> combos;
    auto add_combo = [&](Combo&& c) {
        for (auto& e : combos) {
            if (e.tags == c.tags && abs(e.ph_h - c.ph_h) <= ec.phase_snap) {
                e.c_w = e.c_w + c.c_w;
                e.c_h = e.c_h + c.c_h;
                return;
            }
        }
        combos.push_back(std::move(c));
    };

    // Cartesian product of weight pieces with one piece per factor; phases
    // add, coefficients multiply, equal-phase selections of the same gens
    // merge (this is what collapses the theta = pi and pi/2 special cases).
    std::vector<size_t> sel(os.factors.size(), 0);
    for (const Piece& w : os.weight) {
        std::fill(sel.begin(), sel.end(), 0);
        while (true) {
            Combo c;
            c.c_w = w.c_w;
            c.c_h = w.c_h;
            BigFloat ph = w.ph_h;
            for (size_t j = 0; j < os.factors.size(); ++j) {
                const Piece& p = os.factors[j].pieces[sel[j]];
                c.c_w = c.c_w * p.c_w;
                c.c_h = c.c_h * p.c_h;
                ph = ph + p.ph_h;
                c.tags.push_back(static_cast<int>(j) * 16 + p.tag);
                if (p.has_gen) c.gens.push_back(&p.gen);
            }
            c.ph_h = reduce_phase(ph, ec.hb, ec.phase_snap);
            add_combo(std::move(c));
            size_t d = 0;
            while (d < sel.size()) {
                if (++sel[d] < os.factors[d].pieces.size()) break;
                sel[d] = 0;
                ++d;
            }
            if (d == sel.size()) break;
        }
    }

    BigFloat pi_h = BigFloat::pi(ec.hb);
    BigComplex total = head;
    int idx = 0;
    for (const Combo& c : combos) {
        if (abs(c.c_w) <= ec.snap) continue;
        std::vector<SmoothFn> gens;
        gens.reserve(c.gens.size() + 1);
        if (os.R.at_w) gens.push_back(os.R);
        for (const SmoothFn* g : c.gens) gens.push_back(*g);
        if (gens.empty())
            throw NotConverged(os.label + ": a phased combination has no smooth part");

        BigComplex cw = c.c_w;
        BigComplex ch = c.c_h;
        mpfr_prec_t wb = ec.wb, hb = ec.hb;
        auto at = [cw, gens, wb](long n) {
            BigComplex z = BigComplex::from_long(n, wb);
            BigComplex v = cw;
            for (const auto& g : gens) v = v * g.at_w(z);
            return v;
        };
        auto at_prec = [cw, ch, gens, wb, hb](long n, mpfr_prec_t b) {
            if (b <= wb) {
                BigComplex z = BigComplex::from_long(n, wb);
                BigComplex v = cw;
                for (const auto& g : gens) v = v * g.at_w(z);
                return v.to_prec(b);
            }
            mpfr_prec_t use = b <= hb ? b : hb;
            BigComplex z = BigComplex::from_long(n, use);
            BigComplex v = ch;
            for (const auto& g : gens) v = v * g.at_hi(z);
            return v.to_prec(use);
        };

        SeriesResult r;
        if (c.ph_h.is_zero()) {
            StructuredTerm f;
            f.at = at;
            f.at_prec = at_prec;
            f.at_point = [cw, gens](const BigComplex& s) {
                BigComplex v = cw;
                for (const auto& g : gens) v = v * g.at_w(s);
                return v;
            };
            f.expand = [cw, gens](const TaylorSeries& ts) {
                TaylorSeries v = gens[0].expand(ts);
                for (size_t j = 1; j < gens.size(); ++j) v = v * gens[j].expand(ts);
                return v * cw;
            };
            r = sum_em_taylor(f, K, ctx, K);
            widen(worst, DecayClass::monotone_poly);
        } else {
            BigComplex z = (c.ph_h == pi_h)
                               ? BigComplex::from_long(-1, hb)
                               : exp(BigComplex(BigFloat::from_long(0, hb), c.ph_h));
            r = sum_oscillatory(at_prec, z, K, ctx, K);
            widen(worst, DecayClass::alternating_poly);
        }
        SeriesStat st;
        st.label = os.label + "/s" + std::to_string(idx);
        st.terms_used = r.terms_used;
        st.strategy = r.strategy;
        st.tail_estimate = r.tail_estimate;
        st.converged = r.converged && !r.diverging;
        stats.push_back(st);
        ok = ok && st.converged;
        total = total + r.value.to_prec(ec.wb);
        ++idx;
    }
    return (os.prefactor * total).to_prec(ec.wb);
}

FactorSpec cos_factor(const BigComplex& xi, const BigComplex& xj, const BigComplex& thj,
                      const BigComplex& d2, const LatticeMap& lm, const EvalCtx& ec) {
    FactorSpec f;
    const PrecisionContext* cp = ec.ctx;
    mpfr_prec_t wb = ec.wb;
    long mult = lm.mult, off = lm.off;

    BigComplex xi2 = pow_si(xi.to_prec(wb), 2);
    BigComplex xj2 = pow_si(xj.to_prec(wb), 2);
    BigComplex lam = xi2 / xj2;
    BigComplex dt = d2.to_prec(wb) / xj2;

    BigComplex xjc = xj.to_prec(wb), thc = thj.to_prec(wb), d2c = d2.to_prec(wb);
    BigFloat lim_snap = ec.snap * (1L + abs(d2c) + abs(xi2));
    f.direct_at = [xi2, d2c, xjc, thc, cp, lim_snap, mult, off, wb](long nu) {
        BigComplex m = BigComplex::from_long(mult * nu + off, wb);
        BigComplex s2 = xi2 * m * m + d2c;
        if (abs(s2) <= lim_snap) return cos_kernel_limit_at_zero(xjc, thc, *cp);
        return cos_kernel_closed(sqrt(s2), xjc, thc, *cp);
    };

    double cr = clearance_radius(xi, d2, lm);
    bool lam_real = ec.nearly_real(lam);
    bool unit = lam_real && abs(lam - 1L) <= ec.snap &&
                abs(xi2 - xj2) <= ec.snap * (1L + abs(xi2));
    bool th_real = ec.nearly_real(thj);
    bool dt_zero = abs(dt) <= ec.snap;

    if (unit && th_real && !dt_zero) {
        // Unit ratio: s = m + delta exactly, delta = dt / (u + m), and the
        // kernel splits into two phased smooth pieces plus the flat 1/(2 s^2).
        double adt = abs(dt).to_double();
        if (!(adt < 1e6)) adt = 1e6;
        f.clearance = std::max(cr, (adt / 2.0 + 4.0) / static_cast<double>(mult));
        for (long sgn : {1L, -1L}) {
            Piece p;
            auto fill = [&](mpfr_prec_t bits, BigComplex& c_out, BigFloat& ph_out) {
                BigFloat base = BigFloat::pi(bits) + thj.re().to_prec(bits) * sgn;
                ph_out = base * mult;
                c_out = off == 0 ? BigComplex::from_long(1, bits)
                                 : exp(BigComplex(BigFloat::from_long(0, bits), base * off));
            };
            fill(ec.wb, p.c_w, p.ph_w);
            fill(ec.hb, p.c_h, p.ph_h);
            auto gen = [xj, thj, d2, mult, off, sgn](mpfr_prec_t bits) {
                BigComplex xj2b = pow_si(xj.to_prec(bits), 2);
                BigComplex dtb = d2.to_prec(bits) / xj2b;
                BigComplex pic = BigComplex(BigFloat::pi(bits));
                BigComplex ith =
                    BigComplex(BigFloat::from_long(0, bits), thj.re().to_prec(bits) * sgn);
                BigComplex xj24 = 4L * xj2b;
                return [=](const auto& nu) {
                    auto m = nu * mult + off;
                    auto u = sqrt(m * m + dtb);
                    auto delta = dtb / (u + m);
                    return pic * exp(ith * delta) / (xj24 * (u * sin(pic * delta)));
                };
            };
            p.gen = erase_gen(gen, ec.wb, ec.hb);
            p.has_gen = true;
            p.tag = sgn > 0 ? 0 : 1;
            f.pieces.push_back(p);
        }
        Piece g3;
        g3.c_w = BigComplex::from_long(1, ec.wb);
        g3.c_h = BigComplex::from_long(1, ec.hb);
        g3.ph_w = BigFloat::from_long(0, ec.wb);
        g3.ph_h = BigFloat::from_long(0, ec.hb);
        auto gen3 = [xj, d2, mult, off](mpfr_prec_t bits) {
            BigComplex xj2b = pow_si(xj.to_prec(bits), 2);
            BigComplex dtb = d2.to_prec(bits) / xj2b;
            BigComplex minus_half = BigComplex::from_long(-1, bits) / 2L;
            return [=](const auto& nu) {
                auto m = nu * mult + off;
                return minus_half / (xj2b * (m * m + dtb));
            };
        };
        g3.gen = erase_gen(gen3, ec.wb, ec.hb);
        g3.has_gen = true;
        g3.tag = 2;
        f.pieces.push_back(g3);
        return f;
    }

    if (!lam_real || !(lam.re() > BigFloat::from_long(0, wb))) {
        // The sampled argument keeps a growing imaginary part, so the kernel
        // is smooth (and in fact decaying) on the whole tail.  cos/sin of a
        // hugely imaginary argument overflows the exponent range when taken
        // separately, so the ratio is evaluated through one-sided exponentials:
        // for sig * Im u > 0,
        //   cos(th u)/sin(pi u)
        //     = i sig (e^{i sig (pi+th) u} + e^{i sig (pi-th) u}) / (e^{2 pi i sig u} - 1),
        // every exponent decaying or bounded for |Re th| <= pi.
        double imcross = 0.0;
        {
            double li = ec.nearly_real(lam) ? 0.0 : lam.im().to_double();
            double di = dt.im().to_double();
            if (std::isfinite(li) && std::isfinite(di) && li != 0.0 && di != 0.0 &&
                di / li < 0.0)
                imcross = std::sqrt(-di / li) / static_cast<double>(mult) + 2.0;
        }
        f.clearance = std::max({cr, 2.0, imcross});
        BigComplex mtest = BigComplex::from_long(1000000L * mult + off, wb);
        BigComplex utest = sqrt(lam * mtest * mtest + dt);
        long sig = utest.im() > BigFloat::from_long(0, wb) ? 1 : -1;
        Piece p;
        p.c_w = BigComplex::from_long(1, ec.wb);
        p.c_h = BigComplex::from_long(1, ec.hb);
        p.ph_w = BigFloat::from_long(0, ec.wb);
        p.ph_h = BigFloat::from_long(0, ec.hb);
        auto gen = [xi, xj, thj, d2, mult, off, sig](mpfr_prec_t bits) {
            BigComplex xj2b = pow_si(xj.to_prec(bits), 2);
            BigComplex lamb = pow_si(xi.to_prec(bits), 2) / xj2b;
            BigComplex dtb = d2.to_prec(bits) / xj2b;
            BigComplex thb = thj.to_prec(bits);
            BigComplex pic = BigComplex(BigFloat::pi(bits));
            BigComplex isig =
                BigComplex(BigFloat::from_long(0, bits), BigFloat::from_long(sig, bits));
            BigComplex ep = isig * (pic + thb);
            BigComplex em = isig * (pic - thb);
            BigComplex e2 = isig * (2L * pic);
            BigComplex front = pic * isig;
            BigComplex xj22 = 2L * xj2b;
            return [=](const auto& nu) {
                auto m = nu * mult + off;
                auto v = lamb * (m * m) + dtb;
                auto u = sqrt(v);
                auto den = exp(e2 * u) - 1L;
                return front * (exp(ep * u) + exp(em * u)) / (den * (xj22 * u)) -
                       1L / (xj22 * v);
            };
        };
        p.gen = erase_gen(gen, ec.wb, ec.hb);
        p.has_gen = true;
        p.tag = 0;
        f.pieces.push_back(p);
        return f;
    }

    // Real positive non-unit ratio, a collapsed offset, or a nonreal theta on
    // the unit lattice: no supported split, the probe/direct path must carry it.
    f.splittable = false;
    f.clearance = cr;
    return f;
}

FactorSpec sin_factor(const BigComplex& xi, const BigComplex& xj, const BigComplex& thj,
                      const BigComplex& d2, const EvalCtx& ec) {
    FactorSpec f;
    const PrecisionContext* cp = ec.ctx;
    mpfr_prec_t wb = ec.wb;

    BigComplex xi2 = pow_si(xi.to_prec(wb), 2);
    BigComplex xj2 = pow_si(xj.to_prec(wb), 2);
    BigComplex lam = xi2 / xj2;
    BigComplex dt = d2.to_prec(wb) / xj2;

    BigComplex xjc = xj.to_prec(wb), thc = thj.to_prec(wb), d2c = d2.to_prec(wb);
    BigComplex scale = (4L * xjc) / BigComplex(BigFloat::pi(wb));
    f.direct_at = [xi2, d2c, xjc, thc, cp, scale, wb](long nu) {
        BigComplex m = BigComplex::from_long(2 * nu + 1, wb);
        BigComplex s2 = xi2 * m * m + d2c;
        return sin_kernel_closed(sqrt(s2), xjc, thc, *cp) * scale;
    };

    LatticeMap lm{2, 1};
    double cr = clearance_radius(xi, d2, lm);
    bool lam_real = ec.nearly_real(lam);
    bool unit = lam_real && abs(lam - 1L) <= ec.snap &&
                abs(xi2 - xj2) <= ec.snap * (1L + abs(xi2));
    bool th_real = ec.nearly_real(thj);
    bool dt_zero = abs(dt) <= ec.snap;

    if (unit && th_real && !dt_zero) {
        double adt = abs(dt).to_double();
        if (!(adt < 1e6)) adt = 1e6;
        f.clearance = std::max(cr, adt / 4.0 + 4.0);
        for (long sgn : {1L, -1L}) {
            Piece p;
            // cos(pi u / 2) = -(-1)^nu sin(pi delta / 2) on the odd lattice,
            // so relative to the weight split the coefficients carry one extra
            // minus sign.
            auto fill = [&](mpfr_prec_t bits, BigComplex& c_out, BigFloat& ph_out) {
                BigFloat thb = thj.re().to_prec(bits) * sgn;
                ph_out = 2L * thb + BigFloat::pi(bits);
                BigComplex e = exp(BigComplex(BigFloat::from_long(0, bits), thb));
                BigComplex isg =
                    BigComplex(BigFloat::from_long(0, bits), BigFloat::from_long(sgn, bits));
                c_out = isg * e / 2L;
            };
            fill(ec.wb, p.c_w, p.ph_w);
            fill(ec.hb, p.c_h, p.ph_h);
            auto gen = [xj, thj, d2, sgn](mpfr_prec_t bits) {
                BigComplex xjb = xj.to_prec(bits);
                BigComplex xj2b = pow_si(xjb, 2);
                BigComplex dtb = d2.to_prec(bits) / xj2b;
                BigComplex pic = BigComplex(BigFloat::pi(bits));
                BigComplex ith =
                    BigComplex(BigFloat::from_long(0, bits), thj.re().to_prec(bits) * sgn);
                return [=](const auto& nu) {
                    auto m = nu * 2L + 1L;
                    auto u = sqrt(m * m + dtb);
                    auto delta = dtb / (u + m);
                    return exp(ith * delta) / (xjb * (u * sin(pic * delta / 2L)));
                };
            };
            p.gen = erase_gen(gen, ec.wb, ec.hb);
            p.has_gen = true;
            p.tag = sgn > 0 ? 0 : 1;
            f.pieces.push_back(p);
        }
        return f;
    }

    if (!lam_real || !(lam.re() > BigFloat::from_long(0, wb))) {
        // Same one-sided exponential rewrite as the cosine kernel: for
        // sig * Im u > 0,
        //   sin(th u)/cos(pi u / 2)
        //     = -i sig (e^{i sig (pi/2+th) u} - e^{i sig (pi/2-th) u}) / (e^{i sig pi u} + 1),
        // every exponent decaying or bounded for |Re th| <= pi/2.
        double imcross = 0.0;
        {
            double li = ec.nearly_real(lam) ? 0.0 : lam.im().to_double();
            double di = dt.im().to_double();
            if (std::isfinite(li) && std::isfinite(di) && li != 0.0 && di != 0.0 &&
                di / li < 0.0)
                imcross = std::sqrt(-di / li) / 2.0 + 2.0;
        }
        f.clearance = std::max({cr, 2.0, imcross});
        BigComplex mtest = BigComplex::from_long(2000001L, wb);
        BigComplex utest = sqrt(lam * mtest * mtest + dt);
        long sig = utest.im() > BigFloat::from_long(0, wb) ? 1 : -1;
        Piece p;
        p.c_w = BigComplex::from_long(1, ec.wb);
        p.c_h = BigComplex::from_long(1, ec.hb);
        p.ph_w = BigFloat::from_long(0, ec.wb);
        p.ph_h = BigFloat::from_long(0, ec.hb);
        auto gen = [xi, xj, thj, d2, sig](mpfr_prec_t bits) {
            BigComplex xjb = xj.to_prec(bits);
            BigComplex xj2b = pow_si(xjb, 2);
            BigComplex lamb = pow_si(xi.to_prec(bits), 2) / xj2b;
            BigComplex dtb = d2.to_prec(bits) / xj2b;
            BigComplex thb = thj.to_prec(bits);
            BigComplex pic = BigComplex(BigFloat::pi(bits));
            BigComplex isig =
                BigComplex(BigFloat::from_long(0, bits), BigFloat::from_long(sig, bits));
            BigComplex ep = isig * (pic / 2L + thb);
            BigComplex em = isig * (pic / 2L - thb);
            BigComplex e1 = isig * pic;
            BigComplex front = BigComplex::from_long(0, bits) - isig;
            return [=](const auto& nu) {
                auto m = nu * 2L + 1L;
                auto v = lamb * (m * m) + dtb;
                auto u = sqrt(v);
                auto den = exp(e1 * u) + 1L;
                return front * (exp(ep * u) - exp(em * u)) / (den * (xjb * u));
            };
        };
        p.gen = erase_gen(gen, ec.wb, ec.hb);
        p.has_gen = true;
        p.tag = 0;
        f.pieces.push_back(p);
        return f;
    }

    f.splittable = false;
    f.clearance = cr;
    return f;
}

std::vector<Piece> cos_weight_pieces(const BigComplex& theta, const EvalCtx& ec) {
    std::vector<Piece> out;
    if (!ec.nearly_real(theta)) return out;
    for (long sgn : {1L, -1L}) {
        Piece p;
        auto fill = [&](mpfr_prec_t bits, BigComplex& c_out, BigFloat& ph_out) {
            ph_out = BigFloat::pi(bits) + theta.re().to_prec(bits) * sgn;
            c_out = BigComplex::from_long(-1, bits) / 2L;
        };
        fill(ec.wb, p.c_w, p.ph_w);
        fill(ec.hb, p.c_h, p.ph_h);
        p.has_gen = false;
        p.tag = -1;
        out.push_back(p);
    }
    return out;
}

std::vector<Piece> sin_weight_pieces(const BigComplex& theta, const EvalCtx& ec) {
    std::vector<Piece> out;
    if (!ec.nearly_real(theta)) return out;
    for (long sgn : {1L, -1L}) {
        Piece p;
        auto fill = [&](mpfr_prec_t bits, BigComplex& c_out, BigFloat& ph_out) {
            BigFloat thb = theta.re().to_prec(bits) * sgn;
            ph_out = 2L * thb + BigFloat::pi(bits);
            BigComplex e = exp(BigComplex(BigFloat::from_long(0, bits), thb));
            BigComplex mi =
                BigComplex(BigFloat::from_long(0, bits), BigFloat::from_long(-sgn, bits));
            c_out = mi * e / 2L;
        };
        fill(ec.wb, p.c_w, p.ph_w);
        fill(ec.hb, p.c_h, p.ph_h);
        p.has_gen = false;
        p.tag = -1;
        out.push_back(p);
    }
    return out;
}

BigComplex closed_cos_factor(const BigComplex& t, const BigComplex& a, const BigComplex& x,
                             const BigComplex& theta, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits();
    BigComplex tau2 = (t * t - a * a).to_prec(wb);
    BigFloat lim = tenpow(-(ctx.working_digits() - 10), wb) * (1L + abs(t * t) + abs(a * a));
    if (abs(tau2) <= lim) return cos_kernel_limit_at_zero(x, theta, ctx);
    return cos_kernel_closed(sqrt(tau2), x, theta, ctx);
}

BigComplex closed_sin_ratio(const BigComplex& t, const BigComplex& a, const BigComplex& x,
                            const BigComplex& theta, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits();
    BigComplex tau2 = (t * t - a * a).to_prec(wb);
    BigComplex scale = (4L * x.to_prec(wb)) / BigComplex(BigFloat::pi(wb));
    return sin_kernel_closed(sqrt(tau2), x, theta, ctx) * scale;
}

void finish_report(VerificationReport& rep, const BigComplex& lhs, const BigComplex& rhs,
                   DecayClass worst, bool converged, const PrecisionContext& ctx) {
    mpfr_prec_t wb = ctx.working_bits();
    rep.lhs = lhs.to_prec(wb);
    rep.rhs = rhs.to_prec(wb);
    rep.abs_residual = abs(rep.lhs - rep.rhs);
    BigFloat denom = max(BigFloat::from_long(1, wb), abs(rep.rhs));
    rep.rel_residual = rep.abs_residual / denom;
    rep.tolerance = class_tolerance(worst, ctx);
    rep.working_digits = ctx.working_digits();
    rep.pass = rep.hypothesis.ok && converged && rep.rel_residual <= rep.tolerance;
}

double clearance_radius(const BigComplex& x, const BigComplex& c, const LatticeMap& lm) {
    double ax = abs(x).to_double();
    double ac = abs(c).to_double();
    if (!(ax > 0) || !std::isfinite(ac)) return 2.0;
    double m = std::sqrt(ac) / ax;
    return (m + static_cast<double>(lm.off < 0 ? -lm.off : lm.off)) /
               static_cast<double>(lm.mult) +
           2.0;
}

} // namespace detail
} // namespace ramv
