#include "ramv/bigrational.hpp"

#include <cctype>

#include "ramv/errors.hpp"

namespace ramv {

BigRational::BigRational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
    mpq_canonicalize(v_);
}

BigRational BigRational::from_string(std::string_view s) {
    std::string body(s);
    // Normalize decimals and exponents into an exact fraction.
    auto epos = body.find_first_of("eE");
    long exp10 = 0;
    if (epos != std::string::npos && body.find('/') == std::string::npos) {
        exp10 = std::stol(body.substr(epos + 1));
        body.erase(epos);
    }
    auto dot = body.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(body.size() - dot - 1);
        body.erase(dot, 1);
    }
    BigRational r;
    if (mpq_set_str(r.v_, body.c_str(), 10) != 0)
        throw DomainError("unparseable rational: " + std::string(s));
    mpq_canonicalize(r.v_);
    if (exp10 != 0) {
        mpq_t p;
        mpq_init(p);
        mpz_ui_pow_ui(mpq_numref(p), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
        mpz_set_ui(mpq_denref(p), 1);
        if (exp10 < 0) mpq_inv(p, p);
        mpq_mul(r.v_, r.v_, p);
        mpq_clear(p);
    }
    return r;
}

#define RAMV_QOP(op, fn)                                               \
    BigRational operator op(const BigRational& a, const BigRational& b) { \
        BigRational r;                                                 \
        fn(r.v_, a.v_, b.v_);                                          \
        return r;                                                      \
    }
RAMV_QOP(+, mpq_add)
RAMV_QOP(-, mpq_sub)
RAMV_QOP(*, mpq_mul)
#undef RAMV_QOP

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    BigRational r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
}

BigRational BigRational::operator-() const {
    BigRational r;
    mpq_neg(r.v_, v_);
    return r;
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational");
    BigRational r;
    mpq_inv(r.v_, v_);
    return r;
}

std::string BigRational::to_string() const {
    char* s = mpq_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

BigFloat BigRational::to_bigfloat(mpfr_prec_t bits) const {
    BigFloat r(bits);
    mpfr_set_q(r.raw(), v_, MPFR_RNDN);
    return r;
}

BigRational binomial(unsigned long n, unsigned long k) {
    BigRational r;
    if (k > n) return r; // zero
    mpz_bin_uiui(mpq_numref(r.raw()), n, k);
    return r;
}

} // namespace ramv
