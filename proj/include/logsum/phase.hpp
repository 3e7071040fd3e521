#ifndef LOGSUM_PHASE_HPP
#define LOGSUM_PHASE_HPP

#include <optional>
#include <string>
#include <vector>

#include "logsum/replica.hpp"
#include "logsum/se.hpp"

namespace logsum {

enum class BoundaryMethod { SeAdaptive, SeL1, AnalyticFixedEps, ItLimit };

const char* to_string(BoundaryMethod m);

struct BoundaryQuery {
    std::vector<double> rho_grid;       // strictly ascending, in (0,1)
    BoundaryMethod method = BoundaryMethod::SeAdaptive;
    std::optional<double> epsilon;      // required for AnalyticFixedEps
    double alpha_tolerance = 1e-3;
    bool audit = false;                 // probe 5 interior alphas per bisection and
                                        // log threshold inconsistencies to stderr
};

struct BoundaryPoint {
    double rho;
    double alpha_c;
    bool saturated;  // bracket invalid at either end; value pinned to that end
};

// Reconstruction boundary per rho. SE methods bisect alpha in (rho, 1) against
// the success predicate of se_run from the uninformed init (MSE = rho, chi = 1);
// AnalyticFixedEps delegates to replica::alpha_c; ItLimit returns alpha = rho.
std::vector<BoundaryPoint> boundary(const BoundaryQuery& query, const Quadrature& quad);

enum class Phase { Easy, Hard, Impossible };

const char* to_string(Phase p);

struct PhaseLabel {
    Phase label;
    std::vector<std::pair<double, double>> fixed_points;  // (mse, chi) of stable points
};

// Classifies (alpha, rho) by the SE fixed points reached from the uninformed
// init (rho, 1) and an informed init (1e-8, 1e-8) probing the origin's basin.
PhaseLabel classify(double alpha, double rho, const Schedule& schedule, const Quadrature& quad);

struct BenchRow {
    double alpha;
    std::string denoiser;  // "logsum_adaptive" or "l1"
    double mean_tau;       // over converged runs; NaN when none converged
    double stderr_tau;
    int n_converged;
    int n_failed;
};

struct BenchConfig {
    double rho = 0.4;
    std::vector<double> alpha_grid;
    int n = 2000;            // desk-scale default; pass 10000 for the full setup
    int seeds = 10;
    std::uint64_t base_seed = 1234;
    int t_max = 50000;
    int stall_window = 500;  // stop runs pinned at a metastable fixed point
    int jobs = 1;
};

// Convergence-time benchmark: per (alpha, denoiser), AMP runs across seeds with
// tau = iterations to MSE < 1e-10; non-converged runs count as failures.
// Both denoisers see identical instances per seed. Results are merged in a
// deterministic key order regardless of the job count.
std::vector<BenchRow> convergence_bench(const BenchConfig& config);

}  // namespace logsum

#endif
