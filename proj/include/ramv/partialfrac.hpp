#pragma once

#include <vector>

#include "ramv/bigrational.hpp"

namespace ramv {

// Exact-rational evaluation point for the partial fraction schemas.  xs and ys
// must each be pairwise distinct; ys may be empty.  as_ and bs are the shift
// parameters of the generalized skeletons; the four basic checks ignore them.
struct RationalPoint {
    std::vector<BigRational> xs;
    std::vector<BigRational> ys;
    BigRational t;
    std::vector<BigRational> as_;
    std::vector<BigRational> bs;
};

// One term of a general-skeleton multi-sum, already evaluated at a fixed index
// tuple: rx[i] = R_i(m_i), cx[i] = c_i(m_i); ry/cy likewise for the y family
// (P_i(n_i), l_i(n_i)) and stay empty in the one-family case.
struct SkeletonTerm {
    std::vector<BigRational> rx;
    std::vector<BigRational> cx;
    std::vector<BigRational> ry;
    std::vector<BigRational> cy;
};

// Each check computes LHS - RHS of its schema in exact rational arithmetic and
// returns the exact difference; a valid point yields the rational 0, not an
// approximation.  Degenerate points (coincident parameters or a vanishing
// denominator factor) raise DegenerateInput before any division happens.

// 1/prod(x_i - t) = sum_i 1/((x_i - t) prod_{j != i}(x_j - x_i)); ys unused.
BigRational check_simple_pf(const RationalPoint& p);

// 1/prod(1 - x_i t) = sum_i 1/((1 - x_i t) prod_{j != i}(1 - x_j/x_i)).
BigRational check_reciprocal_pf(const RationalPoint& p);

// sum_i 1/(prod_j(1 - x_j y_i) prod_{j != i}(1 - y_j/y_i))
//   = sum_i 1/(prod_j(1 - x_i y_j) prod_{j != i}(1 - x_j/x_i)).
BigRational check_symmetric_pf(const RationalPoint& p);

// 1/(prod_i(x_i - t) prod_i(y_i - 1/t))
//   = sum_i 1/((x_i - t) prod_j(y_j - 1/x_i) prod_{j != i}(x_j - x_i))
//   + sum_i 1/(y_i (y_i t - 1) prod_j(x_j - 1/y_i) prod_{j != i}(y_j - y_i)).
// With ys empty the 1/t factors never arise and the schema is the simple one.
BigRational check_bilateral_pf(const RationalPoint& p);

// Single-term skeleton identities behind the general theorems.  With
// bilateral = false verifies, at the given term,
//   prod_i rx_i/(x_i cx_i + a_i - t)
//     = sum_i rx_i/(x_i cx_i + a_i - t) prod_{j != i} rx_j/(x_j cx_j - (x_i cx_i + a_i - a_j));
// with bilateral = true the two-family variant whose second family carries the
// factor ry_i/((y_i cy_i + b_i)(y_i cy_i t + b_i t - 1)) and reciprocal shifts.
BigRational check_general_skeleton(const SkeletonTerm& term, const RationalPoint& point,
                                   bool bilateral);

} // namespace ramv
