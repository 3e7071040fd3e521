#include "logsum/prox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace logsum {

namespace {

constexpr double kJumpTieTol = 1e-10;
constexpr double kXcTol = 1e-12;
constexpr int kXcMaxIter = 200;

double phi_obj(double z, double x, const LogSumParams& p) {
    double d = z - x;
    return 0.5 * d * d + p.lambda * std::log(std::abs(z) + p.epsilon);
}

// r_+ with the discriminant clamped at zero; only valid on branches where the
// discriminant is nonnegative up to rounding.
double r_plus_clamped(double x, const LogSumParams& p) {
    double s = 0.5 * (x + p.epsilon);
    double disc = s * s - p.lambda;
    if (disc < 0.0) disc = 0.0;
    return 0.5 * (x - p.epsilon) + std::sqrt(disc);
}

// c(x) = phi(r_+(x)) - phi(0); the jump sits at its unique root.
double jump_gap(double x, const LogSumParams& p) {
    double r = r_plus_clamped(x, p);
    return phi_obj(r, x, p) - phi_obj(0.0, x, p);
}

}  // namespace

double r_plus(double x, const LogSumParams& p) {
    double s = 0.5 * (x + p.epsilon);
    double disc = s * s - p.lambda;
    if (disc < 0.0) {
        // Allow rounding slop at the boundary of the valid branch.
        if (disc > -1e-12 * (p.lambda + 1.0)) {
            disc = 0.0;
        } else {
            throw std::domain_error("r_plus: negative discriminant");
        }
    }
    return 0.5 * (x - p.epsilon) + std::sqrt(disc);
}

double jump_threshold(const LogSumParams& p) {
    if (p.convex()) throw std::domain_error("jump_threshold: convex regime has no jump");
    double lo = 2.0 * std::sqrt(p.lambda) - p.epsilon;
    double hi = p.lambda / p.epsilon;
    // c(lo) >= 0 (z = 0 wins), c(hi) <= 0 (nonzero root wins).
    double flo = jump_gap(lo, p);
    double fhi = jump_gap(hi, p);
    if (flo <= 0.0) return lo;
    if (fhi >= 0.0) return hi;
    for (int it = 0; it < kXcMaxIter && hi - lo > kXcTol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (jump_gap(mid, p) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SoftResult soft_threshold(double x, double theta) {
    if (theta < 0.0) throw std::invalid_argument("soft_threshold: theta must be >= 0");
    double a = std::abs(x);
    if (a > theta) return {std::copysign(a - theta, x), 1.0};
    return {0.0, 0.0};
}

ThresholdFn::ThresholdFn(const LogSumParams& p) : params_(p), convex_(p.convex()), cut_(0.0) {
    if (params_.lambda == 0.0) {
        cut_ = 0.0;  // identity map
    } else if (convex_) {
        cut_ = params_.lambda / params_.epsilon;
    } else {
        cut_ = jump_threshold(params_);
    }
}

ProxResult ThresholdFn::operator()(double x) const {
    if (params_.lambda == 0.0) {
        // prox of the zero functional is the identity.
        return {x, x == 0.0 ? 0.0 : 1.0, false};
    }
    double a = std::abs(x);
    bool at_jump = !convex_ && std::abs(a - cut_) <= kJumpTieTol;
    if (a <= cut_) {
        // Tie at |x| = x_c resolved to 0.
        return {0.0, 0.0, at_jump};
    }
    double r = r_plus_clamped(a, params_);
    // Rounding at the convex-regime boundary (cut = lambda/epsilon vs epsilon)
    // can land here with r == 0; the output is 0 and so is its derivative.
    if (r == 0.0) return {0.0, 0.0, at_jump};
    double value = std::copysign(r, x);
    double u = r + params_.epsilon;
    // u^2 - lambda in factored form: at epsilon = sqrt(lambda) the direct
    // difference cancels to 0 for small r and the quotient overflows.
    double sl = std::sqrt(params_.lambda);
    double derivative = u * u / ((r + (params_.epsilon - sl)) * (u + sl));
    return {value, derivative, at_jump};
}

}  // namespace logsum
