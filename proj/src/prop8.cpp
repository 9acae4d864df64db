#include "ramv/identities.hpp"

#include <string>
#include <vector>

#include "eval_common.hpp"
#include "ramv/bernoulli.hpp"
#include "ramv/errors.hpp"

namespace ramv {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DegenerateInput(msg);
}

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

void record(const SeriesResult& r, const std::string& label, VerificationReport& rep,
            bool& ok) {
    SeriesStat st;
    st.label = label;
    st.terms_used = r.terms_used;
    st.strategy = r.strategy;
    st.tail_estimate = r.tail_estimate;
    st.converged = r.converged && !r.diverging;
    rep.series_stats.push_back(st);
    ok = ok && st.converged;
}

BigRational factorial(long n) {
    BigRational f(1);
    for (long i = 2; i <= n; ++i) f = f * BigRational(i);
    return f;
}

// One family of the left side: the pure power sum P = sum 1/(n^e (n^(2L) - c))
// plus, per branch phase, the Lambert sum of P's terms against 1/(e^z - 1).
// A branch whose exponent has negative real part is summed through the exact
// split 1/(e^z - 1) = -1 + 1/(1 - e^(-z)), reusing P for the constant part.
struct Family {
    long L;              // half the power in the shifted denominator
    long q_num, q_den;   // exponent of n inside the Lambert factor, as q_num/q_den
    BigComplex shift;    // n^(2L) + shift in the denominator
    double hint;         // leading decay exponent of the power sum
};

BigComplex family_power_term(const Family& fam, long n, mpfr_prec_t bits) {
    BigComplex nc = BigComplex::from_long(n, bits);
    BigFloat e = BigFloat::from_long(2 * fam.L, bits) -
                 BigFloat::from_long(fam.q_num, bits) / BigFloat::from_long(fam.q_den, bits);
    return BigComplex::from_long(1, bits) /
           (pow(nc, BigComplex(e)) * (pow_si(nc, 2 * fam.L) + fam.shift.to_prec(bits)));
}

// Sums sum_n P(n) / (e^(2 pi c n^q) - 1) for one branch coefficient c.
BigComplex lambert_sum(const Family& fam, const BigComplex& c, const BigComplex& power_sum,
                       const std::string& label, const PrecisionContext& ctx,
                       VerificationReport& rep, bool& ok) {
    mpfr_prec_t wb = ctx.working_bits();
    BigFloat zero = BigFloat::from_long(0, wb);
    bool reflected = c.re() < zero;
    BigFloat q = BigFloat::from_long(fam.q_num, wb) / BigFloat::from_long(fam.q_den, wb);
    BigFloat two_pi = BigFloat::pi(wb) * 2L;

    TermFn tf = [&fam, &c, &q, &two_pi, wb, reflected](long n) {
        BigComplex nc = BigComplex::from_long(n, wb);
        BigComplex z = pow(nc, BigComplex(q)) * c * two_pi;
        BigComplex den = reflected ? BigComplex::from_long(1, wb) - exp(-z)
                                   : exp(z) - BigComplex::from_long(1, wb);
        return family_power_term(fam, n, wb) / den;
    };
    SeriesResult r = sum_direct(tf, 1, ctx);
    record(r, label, rep, ok);
    return reflected ? r.value - power_sum : r.value;
}

} // namespace

VerificationReport prop8_eval(const IdentityParams& p, const PrecisionContext& ctx) {
    require(p.xs.size() == 2, "prop8 needs x1 and x2");
    VerificationReport rep;
    if (!gate(rep, "prop8", p, ctx)) return rep;

    mpfr_prec_t wb = ctx.working_bits();
    const long M = p.M, N = p.N;
    BigComplex x1 = p.xs[0].to_prec(wb), x2 = p.xs[1].to_prec(wb);
    BigComplex t = p.t.to_prec(wb);
    BigFloat pi = BigFloat::pi(wb);
    bool ok = true;

    // Branch phases, computed once: e^(i r pi / M), e^(i r pi / N), and the
    // half-step-shifted e^(i pi (r + M/2 - N/2) / N) of the second family.
    auto unit = [&](const BigFloat& angle) {
        return exp(BigComplex(BigFloat::from_long(0, wb), angle));
    };
    std::vector<BigComplex> phM, phN, phN_shift;
    for (long r = 0; r < M; ++r) phM.push_back(unit(pi * r / M));
    for (long r = 0; r < N; ++r) {
        phN.push_back(unit(pi * r / N));
        phN_shift.push_back(unit(pi * (2 * r + M - N) / (2 * N)));
    }

    Family famN;
    famN.L = N;
    famN.q_num = N;
    famN.q_den = M;
    famN.shift = -pow_si(t, 2 * M * N) / pow_si(x2, 2 * M * N);
    famN.hint = 4.0 * static_cast<double>(N) -
                static_cast<double>(N) / static_cast<double>(M);

    Family famM;
    famM.L = M;
    famM.q_num = M;
    famM.q_den = N;
    long sgn = (M % 2 == 1) ? 1 : -1; // (-1)^(M-1)
    famM.shift = pow_si(t, 2 * M * N) / pow_si(x1, 2 * M * N) * sgn;
    famM.hint = 4.0 * static_cast<double>(M) -
                static_cast<double>(M) / static_cast<double>(N);

    auto power_sum = [&](const Family& fam, const std::string& label) {
        TermAtPrec tp = [fam](long n, mpfr_prec_t bits) {
            return family_power_term(fam, n, bits);
        };
        SeriesResult r = sum_em_fit(tp, 1, ctx, fam.hint);
        record(r, label, rep, ok);
        return r.value;
    };
    BigComplex PN = power_sum(famN, "lhs/p1");
    BigComplex PM = power_sum(famM, "lhs/p2");

    BigComplex base2 = pow_si(x2, N) / pow_si(x1, N);
    BigComplex base1 = pow_si(x1, M) / pow_si(x2, M);
    BigComplex lam1 = BigComplex::from_long(0, wb);
    for (long r = 0; r < M; ++r)
        lam1 = lam1 + phM[r] * lambert_sum(famN, phM[r] * base2, PN,
                                           "lhs/l1r" + std::to_string(r), ctx, rep, ok);
    // The shifted phase enters only the exponent; the outer weight stays
    // e^(i r pi / N).
    BigComplex lam2 = BigComplex::from_long(0, wb);
    for (long r = 0; r < N; ++r)
        lam2 = lam2 + phN[r] * lambert_sum(famM, phN_shift[r] * base1, PM,
                                           "lhs/l2r" + std::to_string(r), ctx, rep, ok);

    BigComplex coefN = pow_si(x2, N - 2 * M * N) / pow_si(x1, N - 2 * M * N) *
                       BigComplex(pi) / M;
    BigComplex coefM = pow_si(x1, M - 2 * M * N) / pow_si(x2, M - 2 * M * N) *
                       BigComplex(pi) / N *
                       exp(BigComplex(BigFloat::from_long(0, wb), pi * (M - N) / (2 * N)));
    BigComplex one = BigComplex::from_long(1, wb);
    BigComplex geoM = one - exp(BigComplex(BigFloat::from_long(0, wb), pi / M));
    BigComplex geoN = one - exp(BigComplex(BigFloat::from_long(0, wb), pi / N));

    BigComplex lhs = coefN / geoM * PN + coefN * lam1 + coefM / geoN * PM + coefM * lam2;

    // Right side: Bernoulli terms exactly, then the double phase-sum product.
    BigComplex T0 = pow_si(x1, 2 * M * N) * pow_si(x2, 2 * M * N) /
                    (pow_si(t, 4 * M * N) * 4L);
    BigFloat two_pi = pi * 2L;
    BigComplex T1 = pow_si(x2, 2 * M * N) *
                    (bernoulli(2 * M) / factorial(2 * M)).to_bigfloat(wb) *
                    pow_si(two_pi, 2 * M) / (pow_si(t, 2 * M * N) * 4L);
    BigComplex T2 = pow_si(x1, 2 * M * N) *
                    (bernoulli(2 * N) / factorial(2 * N)).to_bigfloat(wb) *
                    pow_si(two_pi, 2 * N) / (pow_si(t, 2 * M * N) * 4L);
    if (N % 2 == 1) T2 = -T2;

    BigComplex cs1 = BigComplex::from_long(0, wb);
    BigComplex u1 = pow_si(t, N) / pow_si(x1, N) * BigComplex(pi);
    for (long r = 0; r < M; ++r) cs1 = cs1 + phM[r] * coth(u1 * phM[r]);
    BigComplex cs2 = BigComplex::from_long(0, wb);
    BigComplex u2 = pow_si(t, M) / pow_si(x2, M) * BigComplex(pi);
    for (long r = 0; r < N; ++r) cs2 = cs2 + phN[r] * cot(u2 * phN[r]);
    BigComplex T3 = -cs1 * cs2 * BigComplex(pi * pi) * pow_si(x1, 2 * M * N - N) *
                    pow_si(x2, 2 * M * N - M) /
                    (pow_si(t, 4 * M * N - N - M) * (4L * M * N));

    BigComplex rhs = T0 + T1 + T2 + T3;
    detail::finish_report(rep, lhs, rhs, DecayClass::monotone_poly, ok, ctx);
    return rep;
}

} // namespace ramv
