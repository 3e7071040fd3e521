#ifndef LOGSUM_PROX_HPP
#define LOGSUM_PROX_HPP

#include <cmath>
#include <stdexcept>

namespace logsum {

/// Regularization pair (lambda, epsilon) for one log-sum thresholding call.
/// The scalar objective is phi(z) = (z - x)^2 / 2 + lambda * log(|z| + epsilon).
struct LogSumParams {
    double lambda;   // regularization weight, >= 0
    double epsilon;  // smoothing parameter, > 0

    LogSumParams(double lambda_, double epsilon_) : lambda(lambda_), epsilon(epsilon_) {
        if (lambda < 0.0) throw std::invalid_argument("LogSumParams: lambda must be >= 0");
        if (!(epsilon > 0.0)) throw std::invalid_argument("LogSumParams: epsilon must be > 0");
    }

    // Convex iff epsilon >= sqrt(lambda): the objective has a unique local minimum.
    bool convex() const { return epsilon >= std::sqrt(lambda); }
};

struct ProxResult {
    double value;       // S(x; lambda R)
    double derivative;  // S'(x; lambda R)
    bool at_jump;       // |x| within tie tolerance of x_c (nonconvex regime only)
};

// Positive stationary point of phi for x > 0:
//   r_+(x) = (x - eps)/2 + sqrt((x + eps)^2/4 - lambda).
// Throws std::domain_error when the discriminant is negative.
double r_plus(double x, const LogSumParams& p);

// Jump location x_c in the nonconvex regime (epsilon < sqrt(lambda)): the unique
// root of c(x) = phi_x(r_+(x)) - phi_x(0) on [2 sqrt(lambda) - eps, lambda/eps].
// Bisection to absolute tolerance 1e-12. Throws std::domain_error in the convex regime.
double jump_threshold(const LogSumParams& p);

// Soft threshold and its derivative: sign(x) max(|x| - theta, 0).
struct SoftResult {
    double value;
    double derivative;
};
SoftResult soft_threshold(double x, double theta);

/// Log-sum thresholding function with the jump location precomputed, so a whole
/// vector can be denoised with one bisection. Pure and reentrant.
class ThresholdFn {
  public:
    explicit ThresholdFn(const LogSumParams& p);

    ProxResult operator()(double x) const;

    const LogSumParams& params() const { return params_; }
    bool convex() const { return convex_; }
    // Threshold magnitude below which the output is zero (lambda/eps or x_c).
    double cut() const { return cut_; }

  private:
    LogSumParams params_;
    bool convex_;
    double cut_;
};

// One-off evaluation; prefer ThresholdFn when the parameters are reused.
inline ProxResult threshold(double x, const LogSumParams& p) { return ThresholdFn(p)(x); }

}  // namespace logsum

#endif
