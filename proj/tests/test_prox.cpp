#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "logsum/prox.hpp"
#include "oracles.hpp"

using logsum::LogSumParams;
using logsum::ProxResult;
using logsum::ThresholdFn;

TEST_CASE("regime predicate") {
    CHECK(LogSumParams(4.0, 2.0).convex());
    CHECK(LogSumParams(4.0, 5.0).convex());
    CHECK_FALSE(LogSumParams(4.0, 1.0).convex());
    CHECK_THROWS_AS(LogSumParams(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LogSumParams(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("r_plus closed form") {
    LogSumParams p(4.0, 2.0);
    double expected = 1.5 + std::sqrt(8.25);
    CHECK(logsum::r_plus(5.0, p) == doctest::Approx(expected).epsilon(1e-12));

    // Grid oracle: minimizer of phi over z in [0, 10].
    double z_star = oracles::grid_minimize(5.0, p, 0.0, 10.0, 1e-3, 1e-6);
    CHECK(std::abs(logsum::r_plus(5.0, p) - z_star) < 2e-6);
}

TEST_CASE("r_plus at the vanishing discriminant") {
    LogSumParams p(4.0, 1.0);
    double x = 2.0 * std::sqrt(p.lambda) - p.epsilon;  // discriminant is exactly 0
    CHECK(logsum::r_plus(x, p) == doctest::Approx((x - p.epsilon) / 2.0).epsilon(1e-12));
}

TEST_CASE("r_plus small-lambda expansion") {
    LogSumParams p(1e-6, 1.0);
    double x = 10.0;
    double approx = x - p.lambda / (x + p.epsilon);
    CHECK(logsum::r_plus(x, p) == doctest::Approx(approx).epsilon(1e-12));
    CHECK(logsum::r_plus(x, p) == doctest::Approx(9.9999999091).epsilon(1e-9));
    double z_star = oracles::grid_minimize(x, p, 5.0, 12.0, 1e-3, 1e-6);
    CHECK(std::abs(logsum::r_plus(x, p) - z_star) < 2e-6);
}

TEST_CASE("r_plus rejects a negative discriminant") {
    CHECK_THROWS_AS(logsum::r_plus(0.1, LogSumParams(4.0, 1.0)), std::domain_error);
}

TEST_CASE("jump threshold by bisection vs dense scan") {
    LogSumParams p(4.0, 1.0);
    double xc = logsum::jump_threshold(p);
    CHECK(xc > 3.0);
    CHECK(xc < 4.0);

    // Exhaustive scan of c(x) over [3, 4] at step 1e-7.
    auto c = [&](double x) {
        double r = logsum::r_plus(x, p);
        return oracles::phi_objective(r, x, p) - oracles::phi_objective(0.0, x, p);
    };
    double scan_xc = 3.0;
    for (double x = 3.0; x <= 4.0; x += 1e-7) {
        if (c(x) <= 0.0) {
            scan_xc = x;
            break;
        }
    }
    CHECK(std::abs(xc - scan_xc) < 2e-7);
}

TEST_CASE("jump threshold at the collapsing regime boundary") {
    LogSumParams p(4.0, 2.0 - 1e-9);
    double lo = 2.0 * std::sqrt(p.lambda) - p.epsilon;
    double hi = p.lambda / p.epsilon;
    CHECK(hi - lo < 1e-8);  // interval width ~3e-9
    double xc = logsum::jump_threshold(p);
    CHECK(xc >= lo - 1e-12);
    CHECK(xc <= hi + 1e-12);
}

TEST_CASE("jump threshold for strongly nonconvex parameters") {
    LogSumParams p(1.0, 0.1);
    double xc = logsum::jump_threshold(p);
    CHECK(xc >= 1.9);
    CHECK(xc <= 10.0);
    auto c = [&](double x) {
        double r = logsum::r_plus(x, p);
        return oracles::phi_objective(r, x, p) - oracles::phi_objective(0.0, x, p);
    };
    // Two-stage dense scan: locate the sign change coarsely, refine at 1e-7.
    double lo = 1.9, hi = 10.0;
    for (double x = lo; x <= hi; x += 1e-4) {
        if (c(x) <= 0.0) {
            lo = x - 1e-4;
            hi = x;
            break;
        }
    }
    double scan_xc = hi;
    for (double x = lo; x <= hi; x += 1e-7) {
        if (c(x) <= 0.0) {
            scan_xc = x;
            break;
        }
    }
    CHECK(std::abs(xc - scan_xc) < 2e-7);
}

TEST_CASE("jump threshold rejects the convex regime") {
    CHECK_THROWS_AS(logsum::jump_threshold(LogSumParams(4.0, 2.0)), std::domain_error);
}

TEST_CASE("threshold basic values") {
    ThresholdFn convex(LogSumParams(4.0, 2.0));
    ProxResult at0 = convex(0.0);
    CHECK(at0.value == 0.0);
    CHECK(at0.derivative == 0.0);

    ProxResult r = convex(5.0);
    double v = 1.5 + std::sqrt(8.25);
    double u = v + 2.0;
    CHECK(r.value == doctest::Approx(v).epsilon(1e-10));
    CHECK(r.derivative == doctest::Approx(u * u / (u * u - 4.0)).epsilon(1e-10));
    CHECK(r.derivative == doctest::Approx(1.10925).epsilon(1e-4));

    // Derivative against a central finite difference.
    auto f = [&](double x) { return convex(x).value; };
    CHECK(std::abs(r.derivative - oracles::central_diff(f, 5.0, 1e-6)) < 1e-4);
}

TEST_CASE("threshold below the jump returns zero") {
    LogSumParams p(4.0, 1.0);
    ThresholdFn fn(p);
    // c(3) > 0: z = 0 beats the nonzero candidate.
    double r3 = logsum::r_plus(3.0, p);
    CHECK(oracles::phi_objective(r3, 3.0, p) > oracles::phi_objective(0.0, 3.0, p));
    ProxResult res = fn(3.0);
    CHECK(res.value == 0.0);
    CHECK(res.derivative == 0.0);
}

TEST_CASE("at_jump flag and tie resolution") {
    LogSumParams p(4.0, 1.0);
    ThresholdFn fn(p);
    double xc = logsum::jump_threshold(p);
    ProxResult tie = fn(xc);
    CHECK(tie.value == 0.0);  // tie resolved to zero
    CHECK(tie.at_jump);
    CHECK_FALSE(fn(xc + 1e-6).at_jump);
    CHECK(fn(xc + 1e-6).value > 0.0);
}

TEST_CASE("lambda zero degenerates to the identity") {
    ThresholdFn fn(LogSumParams(0.0, 1.0));
    CHECK(fn(3.25).value == 3.25);
    CHECK(fn(3.25).derivative == 1.0);
    CHECK(fn(-0.5).value == -0.5);
    CHECK(fn(0.0).value == 0.0);
    CHECK(fn(0.0).derivative == 0.0);
}

TEST_CASE("soft threshold") {
    CHECK(logsum::soft_threshold(3.0, 1.0).value == 2.0);
    CHECK(logsum::soft_threshold(3.0, 1.0).derivative == 1.0);
    CHECK(logsum::soft_threshold(-0.5, 1.0).value == 0.0);
    CHECK(logsum::soft_threshold(-0.5, 1.0).derivative == 0.0);
    CHECK(logsum::soft_threshold(1.0, 1.0).value == 0.0);
    CHECK(logsum::soft_threshold(1.0, 1.0).derivative == 0.0);
    CHECK(logsum::soft_threshold(-3.0, 1.0).value == -2.0);
}

TEST_CASE("odd symmetry and zero-sign invariants") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(-20.0, 20.0);
    std::uniform_real_distribution<double> ul(1e-3, 10.0);
    std::uniform_real_distribution<double> ue(1e-2, 10.0);
    for (int i = 0; i < 2000; ++i) {
        double x = ux(rng);
        LogSumParams p(ul(rng), ue(rng));
        ThresholdFn fn(p);
        ProxResult a = fn(x);
        ProxResult b = fn(-x);
        CHECK(a.value == -b.value);  // exact odd symmetry
        if (a.value == 0.0) CHECK(a.derivative == 0.0);
        if (a.value != 0.0) CHECK(std::signbit(a.value) == std::signbit(x));
    }
}

TEST_CASE("monotone in |x| above the threshold") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ul(1e-3, 10.0);
    std::uniform_real_distribution<double> ue(1e-2, 10.0);
    for (int i = 0; i < 200; ++i) {
        LogSumParams p(ul(rng), ue(rng));
        ThresholdFn fn(p);
        double cut = fn.cut();
        double prev = 0.0;
        for (double d = 1e-4; d < 10.0; d *= 2.0) {
            double v = fn(cut + d).value;
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("oracle equivalence on random triples") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(-20.0, 20.0);
    std::uniform_real_distribution<double> ul(1e-3, 10.0);
    std::uniform_real_distribution<double> ue(1e-2, 10.0);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        double x = ux(rng);
        LogSumParams p(ul(rng), ue(rng));
        ThresholdFn fn(p);
        if (!fn.convex() && std::abs(std::abs(x) - fn.cut()) < 1e-3) continue;
        double lo = std::min(0.0, x) - 1.0;
        double hi = std::max(0.0, x) + 1.0;
        double z_star = oracles::grid_minimize(x, p, lo, hi, 1e-2, 1e-5);
        CHECK(std::abs(fn(x).value - z_star) < 1e-4);
        ++checked;
    }
    CHECK(checked > 400);
}

TEST_CASE("soft-threshold limit of the log-sum denoiser") {
    LogSumParams p(1.0, 1e6);
    ThresholdFn fn(p);
    double theta = p.lambda / p.epsilon;
    double worst = 0.0;
    for (double x = -10.0; x <= 10.0; x += 1e-3) {
        double d = std::abs(fn(x).value - logsum::soft_threshold(x, theta).value);
        worst = std::max(worst, d);
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("derivative matches finite differences away from kinks") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(-20.0, 20.0);
    std::uniform_real_distribution<double> ul(1e-3, 10.0);
    std::uniform_real_distribution<double> ue(1e-2, 10.0);
    for (int i = 0; i < 1000; ++i) {
        double x = ux(rng);
        LogSumParams p(ul(rng), ue(rng));
        ThresholdFn fn(p);
        if (std::abs(std::abs(x) - fn.cut()) <= 1e-2) continue;
        auto f = [&](double t) { return fn(t).value; };
        double fd = oracles::central_diff(f, x, 1e-6);
        CHECK(std::abs(fn(x).derivative - fd) < 1e-4);
    }
}

TEST_CASE("derivative grows approaching the jump from above") {
    LogSumParams p(4.0, 1.0);
    ThresholdFn fn(p);
    double xc = fn.cut();
    double prev = 0.0;
    for (int k = 2; k <= 8; ++k) {
        double d = fn(xc + std::pow(10.0, -k)).derivative;
        CHECK(d > prev);
        prev = d;
    }
}
