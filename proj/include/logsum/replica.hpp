#ifndef LOGSUM_REPLICA_HPP
#define LOGSUM_REPLICA_HPP

#include <optional>

#include "logsum/se.hpp"

namespace logsum {

/// Zero-temperature RS order parameters evaluated at one (MSE, chi) point.
struct RsFixedPoint {
    double q_big;     // Q
    double m;         // overlap with the true signal
    double chi;       // susceptibility (right-hand side value)
    double q_hat;     // alpha / chi
    double chi_hat;   // alpha * mse / chi^2
    double mse;       // Q - 2m + rho
};

// Standard normal upper-tail probability H(x) = erfc(x / sqrt(2)) / 2.
double ccdf(double x);

// Gaussian integral int Dxi (|xi| + eps)^-2, by adaptive quadrature.
double tail_weight_integral(double epsilon);

/// Solution of the perfect-reconstruction self-consistency in u = eps^2 chi_hat.
struct SelfConsistency {
    double u_star;             // fixed point of u = F(u) (smaller, stable root)
    double f_prime;            // F'(u_star)
    bool stable;               // |F'(u_star)| < 1
};

// Solves u = F(u) with
//   F(u) = (1/alpha) [ 2(1-rho)((u+1)H(1/sqrt u) - sqrt(u) phi(1/sqrt u))
//                      + rho (u + eps^2 * int Dxi (|xi|+eps)^-2) ].
// F is increasing and convex with F(0+) > 0, so the stable root is bracketed by
// [u_lo, argmin_u (F(u) - u)], the minimizer solving F'(u) = alpha analytically.
// Returns nullopt when no solution exists (alpha below the solvable range).
std::optional<SelfConsistency> chi_hat_selfconsistent(double alpha, double rho, double epsilon);

// Smallest alpha in (rho, 1) at which the perfect-reconstruction fixed point is
// locally stable, located by bisection on the existence of a stable u*.
double alpha_c(double rho, double epsilon, double alpha_tol = 1e-7);

// RS right-hand sides evaluated once at the given (mse, chi) with Q_hat =
// alpha/chi, chi_hat = alpha*mse/chi^2; a genuine fixed point returns itself.
// chi == 0 with mse == 0 is the perfect-reconstruction limit (identity
// denoiser; Q = m = rho).
RsFixedPoint rs_order_parameters(double mse, double chi, double alpha, double rho, double epsilon,
                                 const Quadrature& quad);

// dAT expectation E_{x0} int Dxi S'(x0 + (sqrt(chi_hat)/Q_hat) xi; R/Q_hat)^2.
double dat_expectation(const RsFixedPoint& fp, double alpha, double rho, double epsilon,
                       const Quadrature& quad);

// dAT stability: alpha > dat_expectation.
bool dat_stable(const RsFixedPoint& fp, double alpha, double rho, double epsilon,
                const Quadrature& quad);

// Closed form of the dAT expectation in the perfect-reconstruction limit:
// rho + 2 (1 - rho) H(1 / sqrt(u)).
double dat_expectation_limit(double u, double rho);

}  // namespace logsum

#endif
