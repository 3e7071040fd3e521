#ifndef LOGSUM_SE_HPP
#define LOGSUM_SE_HPP

#include <memory>
#include <string>
#include <vector>

#include "logsum/amp.hpp"
#include "logsum/schedule.hpp"

namespace logsum {

/// Macroscopic state-evolution iterate.
struct SeState {
    double mse = 0.0;
    double chi = 0.0;
    int t = 0;
    bool diverged = false;
};

/// Quadrature configuration for the Gaussian expectations. The mixture
/// averages reduce to one-dimensional integrals in the effective field, done
/// by adaptive Gauss-Kronrod with explicit splits at the denoiser breakpoints
/// (xi_abs_tol, xi_cutoff). A Gauss-Hermite rule of hermite_nodes points (odd)
/// is kept available through hermite() for smooth-expectation cross-checks.
/// Near the convexity edge the denoiser derivative varies on sub-ulp scales of
/// its argument, so requested tolerances below about 5e-13 are not honored
/// there; achievable accuracy saturates around 1e-12.
class Quadrature {
  public:
    explicit Quadrature(int hermite_nodes = 101, double xi_abs_tol = 1e-12,
                        double xi_cutoff = 10.0);

    int hermite_nodes() const { return hermite_nodes_; }
    double xi_abs_tol() const { return xi_abs_tol_; }
    double xi_cutoff() const { return xi_cutoff_; }

    // Same settings at double the resolution (for robustness checks).
    Quadrature refined() const { return Quadrature(2 * hermite_nodes_ + 1, 0.5 * xi_abs_tol_, xi_cutoff_); }

    const class GaussHermite& hermite() const;

  private:
    int hermite_nodes_;
    double xi_abs_tol_;
    double xi_cutoff_;
    std::shared_ptr<const class GaussHermite> gh_;
};

struct SeStoppingRule {
    int t_max = 1000;
    double mse_low = 1e-4;
    double mse_high = 1e4;
    double success = 1e-3;  // success threshold on the final MSE
};

// One step of the macroscopic map:
//   h = x0 + sqrt(MSE/alpha) xi,  lambda = chi/alpha,
//   MSE' = E_{x0} int Dxi (S(h) - x0)^2,
//   chi' = (chi/alpha) E_{x0} int Dxi S'(h).
// The mixture splits exactly as (1-rho)[x0 = 0] + rho[x0 ~ N(0,1)]. Under an
// adaptive schedule epsilon is evaluated once per step from the incoming chi.
SeState se_step(const SeState& state, double alpha, double rho, const Schedule& schedule,
                const Quadrature& quad, DenoiserKind denoiser = DenoiserKind::LogSum);

// Iterate se_step with the paper's stopping rules; trajectory recorded per step.
RunReport se_run(double alpha, double rho, const Schedule& schedule, SeState init,
                 const SeStoppingRule& stop, const Quadrature& quad,
                 DenoiserKind denoiser = DenoiserKind::LogSum);

struct FieldNode {
    double mse, chi;       // grid node
    double d_mse, d_chi;   // one-step displacement
    double magnitude;      // sqrt(d_mse^2 + d_chi^2)
};

// One-step displacement at each (mse, chi) grid node; the boundary node (0, 0)
// is appended (a fixed point by construction).
std::vector<FieldNode> vector_field(double alpha, double rho, const Schedule& schedule,
                                    const std::vector<double>& mse_values,
                                    const std::vector<double>& chi_values, const Quadrature& quad,
                                    DenoiserKind denoiser = DenoiserKind::LogSum);

struct FixedPoint {
    SeState state;
    std::vector<int> reached_from;  // indices into the init list
};

// Iterate the map from each init until |dMSE| and |dchi| < 1e-10 or t_max;
// converged points deduplicated within 1e-6 (max norm). Diverging inits
// contribute no fixed point.
std::vector<FixedPoint> stable_fixed_points(double alpha, double rho, const Schedule& schedule,
                                            const Quadrature& quad,
                                            const std::vector<SeState>& inits, int t_max = 2000,
                                            DenoiserKind denoiser = DenoiserKind::LogSum);

}  // namespace logsum

#endif
