#include <doctest.h>

#include <cmath>
#include <random>

#include "logsum/prox.hpp"
#include "logsum/replica.hpp"

using logsum::Quadrature;
using logsum::RsFixedPoint;
using logsum::Schedule;
using logsum::SeState;

namespace {

double phi_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); }

double f_of_u(double u, double alpha, double rho, double eps2_tail) {
    double su = std::sqrt(u);
    double z = 1.0 / su;
    double phi = 2.0 * (1.0 - rho) * ((u + 1.0) * logsum::ccdf(z) - su * phi_pdf(z)) +
                 rho * (u + eps2_tail);
    return phi / alpha;
}

}  // namespace

TEST_CASE("normal tail probability") {
    CHECK(logsum::ccdf(0.0) == 0.5);
    CHECK(logsum::ccdf(1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-14));
    CHECK(logsum::ccdf(-1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-14));
    CHECK(logsum::ccdf(6.0) == doctest::Approx(9.865876450376946e-10).epsilon(1e-10));
}

TEST_CASE("tail weight integral against a trapezoid oracle") {
    for (double eps : {0.1, 0.5, 1.0, 4.0}) {
        double got = logsum::tail_weight_integral(eps);
        // Dense Simpson rule on [0, 40], panel width 1e-4.
        double h = 1e-4;
        double acc = 0.0;
        auto f = [&](double x) {
            double d = x + eps;
            return phi_pdf(x) / (d * d);
        };
        long steps = static_cast<long>(40.0 / h);
        for (long i = 0; i < steps; ++i) {
            double a = i * h, b = a + h;
            acc += h / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
        }
        CHECK(got == doctest::Approx(2.0 * acc).epsilon(1e-9));
    }
    CHECK_THROWS_AS(logsum::tail_weight_integral(0.0), std::invalid_argument);
}

TEST_CASE("self-consistency fixed point against a dense scan") {
    double alpha = 0.5, rho = 0.2, eps = 1.0;
    auto sol = logsum::chi_hat_selfconsistent(alpha, rho, eps);
    REQUIRE(sol.has_value());
    CHECK(sol->stable);
    double eps2_tail = eps * eps * logsum::tail_weight_integral(eps);

    // Fixed-point residual.
    CHECK(std::abs(f_of_u(sol->u_star, alpha, rho, eps2_tail) - sol->u_star) < 1e-10);

    // Dense log-grid scan for the first crossing of F(u) = u.
    double prev_u = 1e-10;
    double prev_g = f_of_u(prev_u, alpha, rho, eps2_tail) - prev_u;
    CHECK(prev_g > 0.0);
    double scan_u = 0.0;
    for (int i = 1; i <= 2000000; ++i) {
        double u = 1e-10 * std::pow(1e11, i / 2000000.0);
        double g = f_of_u(u, alpha, rho, eps2_tail) - u;
        if (g <= 0.0) {
            scan_u = 0.5 * (prev_u + u);
            break;
        }
        prev_u = u;
        prev_g = g;
    }
    REQUIRE(scan_u > 0.0);
    CHECK(std::abs(sol->u_star - scan_u) / scan_u < 1e-4);
}

TEST_CASE("no solution below the reconstruction threshold") {
    double ac = logsum::alpha_c(0.2, 1.0);
    CHECK_FALSE(logsum::chi_hat_selfconsistent(ac - 0.01, 0.2, 1.0).has_value());
    auto above = logsum::chi_hat_selfconsistent(ac + 0.01, 0.2, 1.0);
    REQUIRE(above.has_value());
    CHECK(above->stable);
    CHECK(above->f_prime < 1.0);
}

TEST_CASE("reconstruction threshold properties") {
    // Approaches the counting bound as the smoothing vanishes.
    double ac_small = logsum::alpha_c(0.2, 1e-4);
    CHECK(ac_small > 0.2);
    CHECK(ac_small - 0.2 < 0.01);

    // Monotone in the smoothing width, bounded by (rho, 1).
    double prev = 0.2;
    for (double eps : {0.01, 0.1, 0.5, 1.0, 2.0, 4.0}) {
        double ac = logsum::alpha_c(0.2, eps);
        CHECK(ac > prev);
        CHECK(ac < 1.0);
        prev = ac;
    }

    // Monotone increasing in rho.
    CHECK(logsum::alpha_c(0.1, 1.0) < logsum::alpha_c(0.2, 1.0));
    CHECK(logsum::alpha_c(0.2, 1.0) < logsum::alpha_c(0.4, 1.0));
}

TEST_CASE("order parameters reproduce a macroscopic fixed point") {
    Quadrature quad;
    double alpha = 0.38, rho = 0.2;
    Schedule sched = Schedule::adaptive(0.0);
    std::vector<SeState> inits{{rho, 1.0, 0, false}};
    auto fps = logsum::stable_fixed_points(alpha, rho, sched, quad, inits);
    REQUIRE(fps.size() == 1);
    SeState fp = fps[0].state;
    // Polish the fixed point well below the consistency tolerance.
    for (int i = 0; i < 300; ++i) fp = logsum::se_step(fp, alpha, rho, sched, quad);
    REQUIRE(fp.mse > 1e-3);

    double eps = std::sqrt(fp.chi / alpha);
    RsFixedPoint rs = logsum::rs_order_parameters(fp.mse, fp.chi, alpha, rho, eps, quad);
    CHECK(std::abs(rs.mse - fp.mse) < 1e-8);
    CHECK(std::abs(rs.chi - fp.chi) < 1e-8);
    CHECK(rs.q_hat == doctest::Approx(alpha / fp.chi).epsilon(1e-8));
    CHECK(rs.chi_hat == doctest::Approx(alpha * fp.mse / (fp.chi * fp.chi)).epsilon(1e-12));
    // Q - 2m + rho is the MSE by definition of the overlap.
    CHECK(rs.mse == doctest::Approx(rs.q_big - 2.0 * rs.m + rho).epsilon(1e-12));
}

TEST_CASE("perfect-reconstruction limit of the order parameters") {
    Quadrature quad;
    RsFixedPoint rs = logsum::rs_order_parameters(0.0, 0.0, 0.5, 0.2, 1.0, quad);
    CHECK(rs.q_big == 0.2);
    CHECK(rs.m == 0.2);
    CHECK(rs.chi == 0.0);
    CHECK(rs.mse == 0.0);
}

TEST_CASE("stability expectation against a Monte Carlo oracle") {
    Quadrature quad;
    double rho = 0.2, eps = 1.0;
    RsFixedPoint fp{};
    fp.q_hat = 5.0;
    fp.chi_hat = 0.8;
    double got = logsum::dat_expectation(fp, 0.5, rho, eps, quad);

    double lambda = 1.0 / fp.q_hat;
    double theta = std::sqrt(fp.chi_hat) / fp.q_hat;
    logsum::ThresholdFn fn(logsum::LogSumParams(lambda, eps));
    std::mt19937_64 rng(99);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const long samples = 10'000'000;
    double sum = 0.0, sum_sq = 0.0;
    for (long i = 0; i < samples; ++i) {
        double x0 = (unif(rng) < rho) ? gauss(rng) : 0.0;
        double d = fn(x0 + theta * gauss(rng)).derivative;
        sum += d * d;
        sum_sq += d * d * d * d;
    }
    double mean = sum / samples;
    double se = std::sqrt((sum_sq / samples - mean * mean) / samples);
    CHECK(std::abs(got - mean) < 4.0 * se + 1e-12);
}

TEST_CASE("closed-form stability limit values") {
    CHECK(logsum::dat_expectation_limit(1.0, 0.2) ==
          doctest::Approx(0.2 + 1.6 * logsum::ccdf(1.0)).epsilon(1e-14));
    // Small u: the expectation collapses onto the support fraction.
    CHECK(logsum::dat_expectation_limit(1e-6, 0.3) == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("stability at the threshold matches the replica prediction") {
    Quadrature quad;
    double rho = 0.2, eps = 1.0;
    double ac = logsum::alpha_c(rho, eps);
    auto sol = logsum::chi_hat_selfconsistent(ac + 1e-4, rho, eps);
    REQUIRE(sol.has_value());
    // At the reconstruction threshold the closed-form stability expectation
    // equals alpha (tangency of the two conditions).
    double lim = logsum::dat_expectation_limit(sol->u_star, rho);
    CHECK(std::abs(lim - ac) < 1e-2);
}
