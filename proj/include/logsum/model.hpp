#ifndef LOGSUM_MODEL_HPP
#define LOGSUM_MODEL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace logsum {

/// Parameters of one random instance of the noise-free sparse recovery problem.
struct ProblemSpec {
    int n;              // signal dimension N
    double alpha;       // measurement rate M/N, in (0, 1)
    double rho;         // expected nonzero fraction, in (0, 1)
    std::uint64_t seed;

    int m() const;  // round(alpha * n), >= 1
    void validate() const;
};

/// (A, x0, y) with y = A x0 exactly as computed. Immutable after generation;
/// safe to share read-only across threads.
struct ProblemInstance {
    ProblemSpec spec;
    Eigen::MatrixXd a;   // M x N, entries iid N(0, 1/N)
    Eigen::VectorXd x0;  // Bernoulli-Gaussian, sparsity rho
    Eigen::VectorXd y;   // A * x0
};

// Deterministic given spec.seed; the per-instance stream is derived as
// seed ^ instance_index so sweeps are order-independent.
// Throws std::length_error if n*m*8 bytes exceeds mem_budget_bytes.
ProblemInstance generate(const ProblemSpec& spec, std::uint64_t instance_index = 0,
                         std::size_t mem_budget_bytes = std::size_t{4} << 30);

// (1/N) ||x_hat - x0||^2. Throws std::invalid_argument on length mismatch.
double mse(const Eigen::VectorXd& x_hat, const Eigen::VectorXd& x0);

// Flat binary container: header (n, m as u64; alpha, rho as f64; seed as u64),
// then A row-major, x0, y as little-endian 64-bit floats.
void save_instance(const ProblemInstance& inst, const std::string& path);
ProblemInstance load_instance(const std::string& path);

}  // namespace logsum

#endif
