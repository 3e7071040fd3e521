#ifndef LOGSUM_SCHEDULE_HPP
#define LOGSUM_SCHEDULE_HPP

#include <cmath>
#include <stdexcept>

namespace logsum {

/// Smoothing schedule for the log-sum denoiser.
/// FIXED keeps epsilon constant; ADAPTIVE sets epsilon = sqrt(lambda) + delta_epsilon
/// each step (delta_epsilon may be negative, reproducing the unstable regime).
struct Schedule {
    enum class Kind { Fixed, Adaptive };

    Kind kind;
    double epsilon;        // used when Fixed; > 0
    double delta_epsilon;  // used when Adaptive; any real

    static Schedule fixed(double eps) {
        if (!(eps > 0.0)) throw std::invalid_argument("Schedule: fixed epsilon must be > 0");
        return {Kind::Fixed, eps, 0.0};
    }
    static Schedule adaptive(double delta_eps) { return {Kind::Adaptive, 0.0, delta_eps}; }

    double epsilon_for(double lambda) const {
        if (kind == Kind::Fixed) return epsilon;
        return std::sqrt(lambda) + delta_epsilon;
    }
};

/// Which denoiser drives the recursion: the log-sum thresholding function or
/// the soft-threshold baseline (which ignores the schedule).
enum class DenoiserKind { LogSum, Soft };

}  // namespace logsum

#endif
