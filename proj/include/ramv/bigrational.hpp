#pragma once

#include <gmp.h>

#include <string>
#include <string_view>

#include "ramv/bigfloat.hpp"

namespace ramv {

// Exact rational backed by mpq_t.  Always canonical: lowest terms, positive
// denominator.  Used wherever the result must be exactly zero, never a float.
class BigRational {
public:
    BigRational() { mpq_init(v_); }
    BigRational(long num, long den);
    explicit BigRational(long num) : BigRational(num, 1) {}
    BigRational(const BigRational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    BigRational(BigRational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    BigRational& operator=(const BigRational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    BigRational& operator=(BigRational&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }
    ~BigRational() { mpq_clear(v_); }

    // Accepts "n", "n/d", decimals like "-3.25", and scientific "12e-4".
    static BigRational from_string(std::string_view s);

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }

    friend BigRational operator+(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a, const BigRational& b);
    friend BigRational operator*(const BigRational& a, const BigRational& b);
    friend BigRational operator/(const BigRational& a, const BigRational& b); // b != 0
    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }

    BigRational inverse() const; // nonzero required

    std::string to_string() const;
    BigFloat to_bigfloat(mpfr_prec_t bits) const;

    mpq_srcptr raw() const { return v_; }
    mpq_ptr raw() { return v_; }

private:
    mpq_t v_;
};

// Exact binomial coefficient as a rational (integer-valued).
BigRational binomial(unsigned long n, unsigned long k);

} // namespace ramv
