#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace ramv {

enum class Acceleration {
    none,
    alternating_cvz,
    euler_maclaurin_tail,
};

// Precision policy shared by every evaluator.  target_digits is what the caller
// wants to trust; guard_digits absorbs roundoff and cancellation on top of it.
// All arithmetic runs at working precision; results are only *quoted* at target.
struct PrecisionContext {
    int target_digits = 30;
    int guard_digits = 15; // never effectively below 10
    long max_terms_direct = 10'000'000;
    long max_terms_accelerated = 10'000;
    Acceleration acceleration = Acceleration::none;

    // Guard grows with the planned term count: summing n terms can lose
    // ceil(log10 n) digits to accumulated roundoff.
    int working_digits(long planned_terms = 0) const {
        int guard = std::max(guard_digits, 10);
        if (planned_terms > 1) {
            int extra = static_cast<int>(std::ceil(std::log10(static_cast<double>(planned_terms))));
            guard = std::max(guard, extra);
        }
        return target_digits + guard;
    }

    mpfr_prec_t working_bits(long planned_terms = 0) const {
        return bits_for_digits(working_digits(planned_terms));
    }

    static mpfr_prec_t bits_for_digits(int digits) {
        // 3.3220 > log2(10); the pad keeps decimal round-trips exact.
        return static_cast<mpfr_prec_t>(digits * 3.3220) + 12;
    }
};

} // namespace ramv
