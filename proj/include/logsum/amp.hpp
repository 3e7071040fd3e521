#ifndef LOGSUM_AMP_HPP
#define LOGSUM_AMP_HPP

#include <Eigen/Dense>
#include <vector>

#include "logsum/model.hpp"
#include "logsum/schedule.hpp"

namespace logsum {

enum class RunStatus { Converged, MaxIters, Diverged };

const char* to_string(RunStatus s);

struct TrajectoryPoint {
    int t;
    double mse;
    double chi;
    double chi_over_chi_c;  // chi / (epsilon_t^2 * alpha); 0 for the soft baseline
    double epsilon_t;       // effective epsilon this step; 0 for the soft baseline
};

struct RunReport {
    std::vector<TrajectoryPoint> trajectory;
    RunStatus status = RunStatus::MaxIters;
    int iterations = 0;
    bool k_clamped = false;  // never set on converged runs
};

/// Microscopic AMP iterate.
struct AmpState {
    Eigen::VectorXd x_hat;  // length N
    Eigen::VectorXd z;      // length M
    double chi = 1.0;
    int t = 0;
    bool diverged = false;   // set when a step produces non-finite values
    bool k_clamped = false;  // sticky; set once the Onsager factor hits k_max

    // Paper initialization: x_hat = 0, chi = 1; z = y (the residual at x_hat = 0
    // with no Onsager memory).
    static AmpState init(const ProblemInstance& inst);
};

struct StoppingRule {
    double mse_converge = 1e-10;
    double mse_diverge = 1e4;
    int t_max = 50000;
    // Optional stall detection: give up early once the MSE has not improved by a
    // relative 1e-6 for stall_window iterations (0 disables). Used by the
    // convergence benchmark to cut off runs trapped at a metastable fixed point.
    int stall_window = 0;
};

struct AmpOptions {
    DenoiserKind denoiser = DenoiserKind::LogSum;
    double k_max = 1e10;  // clamp for the Onsager factor after divergence onset
};

// One full AMP sweep, in this exact order:
//   h = x_hat + (N/M) A^T z;  lambda = chi/alpha;  k = (1/(alpha N)) sum S'(h);
//   x_hat = S(h);  z = y - A x_hat + z k;  chi = chi k.
// Under an adaptive schedule epsilon = sqrt(lambda) + delta_eps is set before
// evaluating S and S'. Non-finite results flag the state instead of throwing.
AmpState amp_step(const AmpState& state, const ProblemInstance& inst, const Schedule& schedule,
                  const AmpOptions& opts = {});

// Iterate amp_step until a stopping condition; records one trajectory row per
// iteration (including the initial state at t = 0).
RunReport run(const ProblemInstance& inst, const Schedule& schedule, AmpState init,
              const StoppingRule& stop, const AmpOptions& opts = {});

// Component-wise soft threshold plus the mean derivative for the Onsager term.
struct SoftDenoised {
    Eigen::VectorXd values;
    double mean_derivative;
};
SoftDenoised soft_amp_denoiser(const Eigen::VectorXd& h, double lambda);

}  // namespace logsum

#endif
