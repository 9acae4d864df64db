#include <chrono>
#include <cstdio>
#include <random>

#include "ramv/errors.hpp"
#include "ramv/partialfrac.hpp"

using namespace ramv;

static int fails = 0;
static void check(bool ok, const char* what) {
    if (!ok) { ++fails; std::printf("FAIL %s\n", what); }
    else std::printf("ok   %s\n", what);
}

static BigRational rnd_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-99, 99), den(1, 99);
    return BigRational(num(rng), den(rng));
}

template <typename F>
static bool raises_degenerate(F&& f) {
    try { f(); } catch (const DegenerateInput&) { return true; } catch (...) { return false; }
    return false;
}

int main() {
    const BigRational zero;
    // Hand anchors.
    {
        RationalPoint p{{BigRational(2), BigRational(3)}, {}, BigRational(1), {}, {}};
        check(check_simple_pf(p).is_zero(), "simple xs=[2,3] t=1");
        BigRational lhs = BigRational(1) / ((BigRational(2) - BigRational(1)) * (BigRational(3) - BigRational(1)));
        check(lhs == BigRational(1, 2), "simple LHS = 1/2");
    }
    {
        RationalPoint p{{BigRational(5)}, {}, BigRational(2), {}, {}};
        check(check_simple_pf(p).is_zero(), "simple M=1");
    }
    {
        RationalPoint p{{BigRational(1, 2), BigRational(1, 3)}, {}, BigRational(1), {}, {}};
        check(check_reciprocal_pf(p).is_zero(), "reciprocal xs=[1/2,1/3] t=1");
        RationalPoint q{{BigRational(7)}, {}, BigRational(0), {}, {}};
        check(check_reciprocal_pf(q).is_zero(), "reciprocal t=0");
    }
    {
        RationalPoint p{{BigRational(2)}, {BigRational(3)}, BigRational(0), {}, {}};
        check(check_symmetric_pf(p).is_zero(), "symmetric M=N=1");
        RationalPoint q{{BigRational(2), BigRational(5)}, {BigRational(3)}, BigRational(0), {}, {}};
        check(check_symmetric_pf(q).is_zero(), "symmetric M=2 N=1");
    }
    {
        RationalPoint p{{BigRational(2)}, {BigRational(3)}, BigRational(5), {}, {}};
        check(check_bilateral_pf(p).is_zero(), "bilateral M=N=1");
        RationalPoint q{{BigRational(2), BigRational(7)}, {BigRational(3), BigRational(4)}, BigRational(5), {}, {}};
        check(check_bilateral_pf(q).is_zero(), "bilateral M=N=2");
    }
    // Substitution: at ys=[] the bilateral schema is the simple one.
    {
        RationalPoint p{{BigRational(2), BigRational(-5), BigRational(1, 3)}, {}, BigRational(9, 7), {}, {}};
        check(check_bilateral_pf(p) == check_simple_pf(p), "bilateral ys=[] == simple");
    }
    // Skeleton, one family: R_i = 1, c_i(n) = n^2, tuple (1,2).
    {
        SkeletonTerm t{{BigRational(1), BigRational(1)}, {BigRational(1), BigRational(4)}, {}, {}};
        RationalPoint p{{BigRational(1), BigRational(2)}, {}, BigRational(3),
                        {BigRational(0), BigRational(1, 2)}, {}};
        check(check_general_skeleton(t, p, false).is_zero(), "skeleton (2.5) M=2");
    }
    {
        SkeletonTerm t{{BigRational(3, 7)}, {BigRational(4)}, {}, {}};
        RationalPoint p{{BigRational(2)}, {}, BigRational(5), {}, {}};
        check(check_general_skeleton(t, p, false).is_zero(), "skeleton (2.5) M=1 tautology");
    }
    // Skeleton, bilateral.
    {
        SkeletonTerm t{{BigRational(2), BigRational(1, 3)}, {BigRational(1), BigRational(9)},
                       {BigRational(5)}, {BigRational(4)}};
        RationalPoint p{{BigRational(1), BigRational(2)}, {BigRational(3)}, BigRational(7, 2),
                        {BigRational(0), BigRational(1, 2)}, {BigRational(-1, 3)}};
        check(check_general_skeleton(t, p, true).is_zero(), "skeleton (2.10) M=2 N=1");
    }
    // Degenerates raise before division.
    check(raises_degenerate([] {
        RationalPoint p{{BigRational(2), BigRational(2)}, {}, BigRational(1), {}, {}};
        check_simple_pf(p);
    }), "simple coincident x raises");
    check(raises_degenerate([] {
        RationalPoint p{{BigRational(2), BigRational(3)}, {}, BigRational(2), {}, {}};
        check_simple_pf(p);
    }), "simple x=t raises");
    check(raises_degenerate([] {
        RationalPoint p{{BigRational(1)}, {BigRational(1)}, BigRational(0), {}, {}};
        check_symmetric_pf(p);
    }), "symmetric 1-x*y=0 raises");
    check(raises_degenerate([] {
        RationalPoint p{{BigRational(2)}, {BigRational(3)}, BigRational(1, 3), {}, {}};
        check_bilateral_pf(p);
    }), "bilateral y*t=1 raises");
    check(raises_degenerate([] {
        RationalPoint p{{BigRational(2)}, {BigRational(1, 2)}, BigRational(5), {}, {}};
        check_bilateral_pf(p);
    }), "bilateral x=1/y raises");

    // Random sweeps, 1000 instances per schema, rejection on degeneracy.
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260822);
    auto sweep = [&](const char* name, auto&& run) {
        int done = 0, rejected = 0;
        while (done < 1000) {
            try {
                if (!run().is_zero()) { ++fails; std::printf("FAIL %s nonzero residual\n", name); return; }
                ++done;
            } catch (const DegenerateInput&) { ++rejected; }
        }
        std::printf("ok   sweep %s (1000 zero, %d rejected)\n", name, rejected);
    };
    std::uniform_int_distribution<int> mdist(2, 6), ndist(1, 4);
    sweep("simple", [&] {
        RationalPoint p;
        int M = mdist(rng);
        for (int i = 0; i < M; ++i) p.xs.push_back(rnd_q(rng));
        p.t = rnd_q(rng);
        return check_simple_pf(p);
    });
    sweep("reciprocal", [&] {
        RationalPoint p;
        int M = mdist(rng);
        for (int i = 0; i < M; ++i) p.xs.push_back(rnd_q(rng));
        p.t = rnd_q(rng);
        return check_reciprocal_pf(p);
    });
    sweep("symmetric", [&] {
        RationalPoint p;
        int M = ndist(rng), N = ndist(rng);
        for (int i = 0; i < M; ++i) p.xs.push_back(rnd_q(rng));
        for (int i = 0; i < N; ++i) p.ys.push_back(rnd_q(rng));
        return check_symmetric_pf(p);
    });
    sweep("bilateral", [&] {
        RationalPoint p;
        int M = mdist(rng), N = ndist(rng);
        for (int i = 0; i < M; ++i) p.xs.push_back(rnd_q(rng));
        for (int i = 0; i < N; ++i) p.ys.push_back(rnd_q(rng));
        p.t = rnd_q(rng);
        return check_bilateral_pf(p);
    });
    sweep("skeleton-2.5", [&] {
        SkeletonTerm t;
        RationalPoint p;
        int M = mdist(rng);
        for (int i = 0; i < M; ++i) {
            t.rx.push_back(rnd_q(rng));
            t.cx.push_back(rnd_q(rng));
            p.xs.push_back(rnd_q(rng));
            p.as_.push_back(rnd_q(rng));
        }
        p.t = rnd_q(rng);
        return check_general_skeleton(t, p, false);
    });
    sweep("skeleton-2.10", [&] {
        SkeletonTerm t;
        RationalPoint p;
        int M = ndist(rng), N = ndist(rng);
        for (int i = 0; i < M; ++i) {
            t.rx.push_back(rnd_q(rng));
            t.cx.push_back(rnd_q(rng));
            p.xs.push_back(rnd_q(rng));
            p.as_.push_back(rnd_q(rng));
        }
        for (int i = 0; i < N; ++i) {
            t.ry.push_back(rnd_q(rng));
            t.cy.push_back(rnd_q(rng));
            p.ys.push_back(rnd_q(rng));
            p.bs.push_back(rnd_q(rng));
        }
        p.t = rnd_q(rng);
        return check_general_skeleton(t, p, true);
    });
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0).count();
    std::printf("sweeps took %lld ms\n", (long long)ms);
    std::printf(fails ? "FAILURES: %d\n" : "all ok\n", fails);
    return fails ? 1 : 0;
}
