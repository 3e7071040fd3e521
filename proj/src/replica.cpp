#include "logsum/replica.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "logsum/prox.hpp"
#include "logsum/quadrature.hpp"

namespace logsum {

double ccdf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double tail_weight_integral(double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("tail_weight_integral: epsilon must be > 0");
    auto f = [epsilon](double xi) {
        double d = xi + epsilon;
        return normal_pdf(xi) / (d * d);
    };
    return 2.0 * adaptive_gk15(f, 0.0, 40.0, 1e-12);
}

namespace {

// Inverse of H on (0, 1/2): bisection on the monotone tail.
double ccdf_inv(double p) {
    double lo = 0.0, hi = 40.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
        double mid = 0.5 * (lo + hi);
        if (ccdf(mid) > p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// alpha * F(u) with the epsilon-dependent constant precomputed.
double big_phi(double u, double rho, double eps2_tail) {
    double su = std::sqrt(u);
    double z = 1.0 / su;
    return 2.0 * (1.0 - rho) * ((u + 1.0) * ccdf(z) - su * normal_pdf(z)) +
           rho * (u + eps2_tail);
}

double big_phi_prime(double u, double rho) {
    return 2.0 * (1.0 - rho) * ccdf(1.0 / std::sqrt(u)) + rho;
}

std::optional<SelfConsistency> solve_u(double alpha, double rho, double eps2_tail) {
    if (!(alpha > rho)) return std::nullopt;
    // Minimizer of g(u) = F(u) - u: Phi'(u_min) = alpha.
    double p = (alpha - rho) / (2.0 * (1.0 - rho));
    if (!(p > 0.0) || p >= 0.5) return std::nullopt;
    double z_min = ccdf_inv(p);
    if (z_min <= 0.0) return std::nullopt;
    double u_min = 1.0 / (z_min * z_min);

    auto g = [&](double u) { return big_phi(u, rho, eps2_tail) / alpha - u; };
    if (g(u_min) >= 0.0) return std::nullopt;  // the line never crosses F

    // Stable root lies in (0, u_min); g > 0 at the left end. Bisect in log u.
    double llo = std::log(1e-14), lhi = std::log(u_min);
    if (g(1e-14) <= 0.0) return std::nullopt;  // degenerate; should not happen
    for (int it = 0; it < 200 && lhi - llo > 1e-14; ++it) {
        double lm = 0.5 * (llo + lhi);
        if (g(std::exp(lm)) > 0.0)
            llo = lm;
        else
            lhi = lm;
    }
    double u_star = std::exp(0.5 * (llo + lhi));
    double fp = big_phi_prime(u_star, rho) / alpha;
    return SelfConsistency{u_star, fp, std::abs(fp) < 1.0};
}

}  // namespace

std::optional<SelfConsistency> chi_hat_selfconsistent(double alpha, double rho, double epsilon) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("chi_hat_selfconsistent: alpha, rho must lie in (0,1)");
    double eps2_tail = epsilon * epsilon * tail_weight_integral(epsilon);
    return solve_u(alpha, rho, eps2_tail);
}

double alpha_c(double rho, double epsilon, double alpha_tol) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("alpha_c: rho must lie in (0,1)");
    double eps2_tail = epsilon * epsilon * tail_weight_integral(epsilon);
    auto stable_at = [&](double a) {
        auto sol = solve_u(a, rho, eps2_tail);
        return sol.has_value() && sol->stable;
    };
    double lo = rho, hi = 1.0 - 1e-12;
    if (!stable_at(hi)) return hi;  // boundary saturates at the top of the range
    while (hi - lo > alpha_tol) {
        double mid = 0.5 * (lo + hi);
        if (stable_at(mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

struct DenoiserExpectations {
    double sq;        // E int Dxi S(h)^2
    double overlap;   // E int Dxi x0 S(h)     (nonzero branch only)
    double xi_corr;   // E int Dxi xi S(h)
    double deriv;     // E int Dxi S'(h)
    double deriv_sq;  // E int Dxi S'(h)^2
};

// Gaussian expectation of f(scale * t) for standard normal t, split where the
// argument crosses the zero-output cut magnitude.
template <typename F>
double scaled_gauss(F&& f, double scale, double cut, const Quadrature& quad) {
    if (scale == 0.0) return f(0.0);
    std::vector<double> breaks = {-cut / scale, cut / scale};
    return gaussian_integral_piecewise([&](double t) { return f(scale * t); }, breaks,
                                       quad.xi_cutoff(), quad.xi_abs_tol());
}

// The double Gaussian average over (x0, xi) collapses to one-dimensional
// integrals in the effective field h: on the nonzero branch h ~ N(0, 1+theta^2)
// with E[x0|h] = h/(1+theta^2), so overlap and xi-correlation follow from
// E[h S(h)]; on the zero branch h = theta xi.
DenoiserExpectations denoiser_expectations(double theta, double rho, const ThresholdFn& fn,
                                           const Quadrature& quad) {
    double cut = fn.cut();
    auto sq = [&](double h) {
        double v = fn(h).value;
        return v * v;
    };
    auto hs = [&](double h) { return h * fn(h).value; };
    auto deriv = [&](double h) { return fn(h).derivative; };
    auto deriv_sq = [&](double h) {
        double d = fn(h).derivative;
        return d * d;
    };

    DenoiserExpectations acc{0.0, 0.0, 0.0, 0.0, 0.0};
    double w0 = 1.0 - rho;
    acc.sq += w0 * scaled_gauss(sq, theta, cut, quad);
    if (theta > 0.0)
        acc.xi_corr += w0 * scaled_gauss(hs, theta, cut, quad) / theta;
    acc.deriv += w0 * scaled_gauss(deriv, theta, cut, quad);
    acc.deriv_sq += w0 * scaled_gauss(deriv_sq, theta, cut, quad);

    double sigma2 = 1.0 + theta * theta;
    double sigma = std::sqrt(sigma2);
    double hs_nz = scaled_gauss(hs, sigma, cut, quad);
    acc.sq += rho * scaled_gauss(sq, sigma, cut, quad);
    acc.overlap += rho * hs_nz / sigma2;
    acc.xi_corr += rho * theta * hs_nz / sigma2;
    acc.deriv += rho * scaled_gauss(deriv, sigma, cut, quad);
    acc.deriv_sq += rho * scaled_gauss(deriv_sq, sigma, cut, quad);
    return acc;
}

}  // namespace

RsFixedPoint rs_order_parameters(double mse, double chi, double alpha, double rho, double epsilon,
                                 const Quadrature& quad) {
    if (mse < 0.0) throw std::invalid_argument("rs_order_parameters: mse must be >= 0");
    if (chi == 0.0) {
        // Perfect-reconstruction limit: identity denoiser recovers x0 exactly.
        return {rho, rho, 0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0};
    }
    if (!(chi > 0.0)) throw std::invalid_argument("rs_order_parameters: chi must be >= 0");

    double lambda = chi / alpha;  // = 1 / Q_hat
    double theta = std::sqrt(mse / alpha);
    double chi_hat = alpha * mse / (chi * chi);

    ThresholdFn fn{LogSumParams(lambda, epsilon)};
    DenoiserExpectations ex = denoiser_expectations(theta, rho, fn, quad);

    double q_big = ex.sq;
    double m = ex.overlap;
    double chi_out;
    if (chi_hat > 0.0) {
        chi_out = ex.xi_corr / std::sqrt(chi_hat);
    } else {
        // mse = 0: the xi-correlation form is 0/0; fall back to the equivalent
        // derivative form chi' = (chi/alpha) E[S'].
        chi_out = lambda * ex.deriv;
    }
    return {q_big, m, chi_out, alpha / chi_out, chi_hat, q_big - 2.0 * m + rho};
}

double dat_expectation(const RsFixedPoint& fp, double alpha, double rho, double epsilon,
                       const Quadrature& quad) {
    (void)alpha;
    double lambda = 1.0 / fp.q_hat;
    if (lambda == 0.0) {
        // Degenerate limit: evaluate the closed form instead.
        return dat_expectation_limit(fp.chi_hat * epsilon * epsilon, rho);
    }
    double theta = std::sqrt(fp.chi_hat) / fp.q_hat;
    ThresholdFn fn{LogSumParams(lambda, epsilon)};
    DenoiserExpectations ex = denoiser_expectations(theta, rho, fn, quad);
    return ex.deriv_sq;
}

bool dat_stable(const RsFixedPoint& fp, double alpha, double rho, double epsilon,
                const Quadrature& quad) {
    return alpha > dat_expectation(fp, alpha, rho, epsilon, quad);
}

double dat_expectation_limit(double u, double rho) {
    return rho + 2.0 * (1.0 - rho) * ccdf(1.0 / std::sqrt(u));
}

}  // namespace logsum
