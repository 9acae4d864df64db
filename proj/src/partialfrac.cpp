#include "ramv/partialfrac.hpp"

#include <cstddef>

#include "ramv/errors.hpp"

namespace ramv {

namespace {

const BigRational kOne(1);

void require_distinct(const std::vector<BigRational>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) throw DegenerateInput(std::string("coincident ") + what);
}

void require_nonzero(const BigRational& q, const char* what) {
    if (q.is_zero()) throw DegenerateInput(std::string("vanishing factor: ") + what);
}

// Shift lists may be omitted; an empty list stands for all-zero shifts.
std::vector<BigRational> shifts_or_zero(const std::vector<BigRational>& given, std::size_t n,
                                        const char* what) {
    if (given.empty()) return std::vector<BigRational>(n);
    if (given.size() != n) throw DegenerateInput(std::string("shift list length mismatch: ") + what);
    return given;
}

} // namespace

BigRational check_simple_pf(const RationalPoint& p) {
    const auto& x = p.xs;
    if (x.empty()) throw DegenerateInput("empty x family");
    require_distinct(x, "x");
    for (const auto& xi : x)
        if (xi == p.t) throw DegenerateInput("x_i equals t");

    BigRational lhs = kOne;
    for (const auto& xi : x) lhs /= xi - p.t;

    BigRational rhs;
    for (std::size_t i = 0; i < x.size(); ++i) {
        BigRational den = x[i] - p.t;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) den *= x[j] - x[i];
        rhs += kOne / den;
    }
    return lhs - rhs;
}

BigRational check_reciprocal_pf(const RationalPoint& p) {
    const auto& x = p.xs;
    if (x.empty()) throw DegenerateInput("empty x family");
    require_distinct(x, "x");
    for (const auto& xi : x) {
        require_nonzero(xi, "x_i");
        require_nonzero(kOne - xi * p.t, "1 - x_i t");
    }

    BigRational lhs = kOne;
    for (const auto& xi : x) lhs /= kOne - xi * p.t;

    BigRational rhs;
    for (std::size_t i = 0; i < x.size(); ++i) {
        BigRational den = kOne - x[i] * p.t;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) den *= kOne - x[j] / x[i];
        rhs += kOne / den;
    }
    return lhs - rhs;
}

BigRational check_symmetric_pf(const RationalPoint& p) {
    const auto& x = p.xs;
    const auto& y = p.ys;
    if (x.empty() || y.empty()) throw DegenerateInput("both families must be nonempty");
    require_distinct(x, "x");
    require_distinct(y, "y");
    for (const auto& xi : x) require_nonzero(xi, "x_i");
    for (const auto& yi : y) require_nonzero(yi, "y_i");
    for (const auto& xj : x)
        for (const auto& yi : y) require_nonzero(kOne - xj * yi, "1 - x_j y_i");

    BigRational lhs;
    for (std::size_t i = 0; i < y.size(); ++i) {
        BigRational den = kOne;
        for (const auto& xj : x) den *= kOne - xj * y[i];
        for (std::size_t j = 0; j < y.size(); ++j)
            if (j != i) den *= kOne - y[j] / y[i];
        lhs += kOne / den;
    }

    BigRational rhs;
    for (std::size_t i = 0; i < x.size(); ++i) {
        BigRational den = kOne;
        for (const auto& yj : y) den *= kOne - x[i] * yj;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) den *= kOne - x[j] / x[i];
        rhs += kOne / den;
    }
    return lhs - rhs;
}

BigRational check_bilateral_pf(const RationalPoint& p) {
    const auto& x = p.xs;
    const auto& y = p.ys;
    if (x.empty()) throw DegenerateInput("empty x family");
    require_distinct(x, "x");
    require_distinct(y, "y");
    for (const auto& xi : x)
        if (xi == p.t) throw DegenerateInput("x_i equals t");
    if (!y.empty()) {
        require_nonzero(p.t, "t");
        for (const auto& xi : x) require_nonzero(xi, "x_i");
        for (const auto& yi : y) {
            require_nonzero(yi, "y_i");
            require_nonzero(yi * p.t - kOne, "y_i t - 1");
        }
        for (const auto& xi : x)
            for (const auto& yj : y) require_nonzero(xi * yj - kOne, "x_i y_j - 1");
    }

    BigRational lhs = kOne;
    for (const auto& xi : x) lhs /= xi - p.t;
    for (const auto& yi : y) lhs /= yi - p.t.inverse();

    BigRational rhs;
    for (std::size_t i = 0; i < x.size(); ++i) {
        BigRational den = x[i] - p.t;
        for (const auto& yj : y) den *= yj - x[i].inverse();
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) den *= x[j] - x[i];
        rhs += kOne / den;
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
        BigRational den = y[i] * (y[i] * p.t - kOne);
        for (const auto& xj : x) den *= xj - y[i].inverse();
        for (std::size_t j = 0; j < y.size(); ++j)
            if (j != i) den *= y[j] - y[i];
        rhs += kOne / den;
    }
    return lhs - rhs;
}

BigRational check_general_skeleton(const SkeletonTerm& term, const RationalPoint& point,
                                   bool bilateral) {
    const std::size_t M = term.rx.size();
    const std::size_t N = bilateral ? term.ry.size() : 0;
    if (M == 0) throw DegenerateInput("empty x family");
    if (term.cx.size() != M || point.xs.size() != M)
        throw DegenerateInput("x family length mismatch");
    if (bilateral && (term.cy.size() != N || point.ys.size() != N))
        throw DegenerateInput("y family length mismatch");
    const auto a = shifts_or_zero(point.as_, M, "a");
    const auto b = shifts_or_zero(point.bs, bilateral ? N : 0, "b");

    // px[i] = x_i c_i(m_i) + a_i, the pole location the x-family term i sits at;
    // py[i] = y_i l_i(n_i) + b_i likewise.  Every denominator below is a
    // difference of these against t, 1/t, or each other.
    std::vector<BigRational> px, py;
    for (std::size_t i = 0; i < M; ++i) px.push_back(point.xs[i] * term.cx[i] + a[i]);
    for (std::size_t i = 0; i < N; ++i) py.push_back(point.ys[i] * term.cy[i] + b[i]);

    for (std::size_t i = 0; i < M; ++i) {
        require_nonzero(px[i] - point.t, "x_i c_i + a_i - t");
        for (std::size_t j = 0; j < M; ++j)
            if (j != i) require_nonzero(px[j] - px[i], "resonant x pair");
    }
    if (N > 0) {
        require_nonzero(point.t, "t");
        for (std::size_t i = 0; i < M; ++i) require_nonzero(px[i], "x_i c_i + a_i");
        for (std::size_t i = 0; i < N; ++i) {
            require_nonzero(py[i], "y_i l_i + b_i");
            require_nonzero(py[i] * point.t - kOne, "(y_i l_i + b_i) t - 1");
            for (std::size_t j = 0; j < N; ++j)
                if (j != i) require_nonzero(py[j] - py[i], "resonant y pair");
        }
        for (std::size_t i = 0; i < M; ++i)
            for (std::size_t j = 0; j < N; ++j)
                require_nonzero(py[j] - px[i].inverse(), "y pole against 1/x pole");
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < M; ++j)
                require_nonzero(px[j] - py[i].inverse(), "x pole against 1/y pole");
    }

    BigRational lhs = kOne;
    for (std::size_t i = 0; i < M; ++i) lhs *= term.rx[i] / (px[i] - point.t);
    for (std::size_t i = 0; i < N; ++i) lhs *= term.ry[i] / (py[i] - point.t.inverse());

    BigRational rhs;
    for (std::size_t i = 0; i < M; ++i) {
        BigRational r = term.rx[i] / (px[i] - point.t);
        for (std::size_t j = 0; j < N; ++j)
            r *= term.ry[j] / (py[j] - px[i].inverse());
        for (std::size_t j = 0; j < M; ++j)
            if (j != i) r *= term.rx[j] / (px[j] - px[i]);
        rhs += r;
    }
    for (std::size_t i = 0; i < N; ++i) {
        BigRational r = term.ry[i] / (py[i] * (py[i] * point.t - kOne));
        for (std::size_t j = 0; j < M; ++j)
            r *= term.rx[j] / (px[j] - py[i].inverse());
        for (std::size_t j = 0; j < N; ++j)
            if (j != i) r *= term.ry[j] / (py[j] - py[i]);
        rhs += r;
    }
    return lhs - rhs;
}

} // namespace ramv
