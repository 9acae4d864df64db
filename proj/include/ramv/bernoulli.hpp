#pragma once

#include "ramv/bigrational.hpp"

namespace ramv {

// Exact Bernoulli number B_m (B_1 = -1/2 convention).  Values are computed by
// the binomial recurrence sum_{j<=m} C(m+1,j) B_j = 0 and cached process-wide;
// the cache tolerates concurrent readers and duplicate writers (idempotent).
BigRational bernoulli(unsigned long m);

} // namespace ramv
