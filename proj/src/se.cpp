#include "logsum/se.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "logsum/prox.hpp"
#include "logsum/quadrature.hpp"

namespace logsum {

Quadrature::Quadrature(int hermite_nodes, double xi_abs_tol, double xi_cutoff)
    : hermite_nodes_(hermite_nodes), xi_abs_tol_(xi_abs_tol), xi_cutoff_(xi_cutoff) {
    if (hermite_nodes_ < 1 || hermite_nodes_ % 2 == 0)
        throw std::invalid_argument("Quadrature: hermite_nodes must be odd and positive");
    if (!(xi_abs_tol_ > 0.0) || !(xi_cutoff_ > 0.0))
        throw std::invalid_argument("Quadrature: tolerances must be positive");
    gh_ = std::make_shared<GaussHermite>(hermite_nodes_);
}

const GaussHermite& Quadrature::hermite() const { return *gh_; }

namespace {

// Scalar denoiser facade used by the integrals: log-sum or soft threshold,
// with the zero-output cut magnitude exposed for the piecewise splits.
struct ScalarDenoiser {
    DenoiserKind kind;
    double lambda;
    const ThresholdFn* fn;  // set for LogSum

    double cut() const { return kind == DenoiserKind::Soft ? lambda : fn->cut(); }

    void eval(double h, double& value, double& deriv) const {
        if (kind == DenoiserKind::Soft) {
            SoftResult r = soft_threshold(h, lambda);
            value = r.value;
            deriv = r.derivative;
        } else {
            ProxResult r = (*fn)(h);
            value = r.value;
            deriv = r.derivative;
        }
    }
};

// Gaussian expectation of f(scale * t) for standard normal t, split where the
// argument crosses the zero-output cut of the denoiser.
template <typename F>
double scaled_gauss(F&& f, double scale, double cut, const Quadrature& quad) {
    if (scale == 0.0) return f(0.0);
    std::vector<double> breaks = {-cut / scale, cut / scale};
    return gaussian_integral_piecewise([&](double t) { return f(scale * t); }, breaks,
                                       quad.xi_cutoff(), quad.xi_abs_tol());
}

struct Moments {
    double mse;    // E_x0 int Dxi (S(x0 + theta xi) - x0)^2
    double deriv;  // E_x0 int Dxi S'(x0 + theta xi)
};

// Both conditioning variables are Gaussian, so the double average collapses to
// one-dimensional integrals in the effective field h: on the nonzero branch
// h ~ N(0, 1 + theta^2) with E[x0|h] = h/(1+theta^2), Var[x0|h] =
// theta^2/(1+theta^2); on the zero branch h = theta xi. This keeps the
// denoiser kinks at exact breakpoints of the one-dimensional integrals.
Moments mixture_moments(double theta, double rho, const ScalarDenoiser& den,
                        const Quadrature& quad) {
    double cut = den.cut();
    auto value = [&](double h) {
        double v, d;
        den.eval(h, v, d);
        return v;
    };
    auto deriv = [&](double h) {
        double v, d;
        den.eval(h, v, d);
        return d;
    };

    double mse0 = scaled_gauss([&](double h) { double v = value(h); return v * v; }, theta, cut,
                               quad);
    double deriv0 = scaled_gauss(deriv, theta, cut, quad);

    double sigma2 = 1.0 + theta * theta;
    double sigma = std::sqrt(sigma2);
    double mse_nz = scaled_gauss(
                        [&](double h) {
                            double e = value(h) - h / sigma2;
                            return e * e;
                        },
                        sigma, cut, quad) +
                    theta * theta / sigma2;
    double deriv_nz = scaled_gauss(deriv, sigma, cut, quad);

    return {(1.0 - rho) * mse0 + rho * mse_nz, (1.0 - rho) * deriv0 + rho * deriv_nz};
}

}  // namespace

SeState se_step(const SeState& state, double alpha, double rho, const Schedule& schedule,
                const Quadrature& quad, DenoiserKind denoiser) {
    SeState next;
    next.t = state.t + 1;

    double lambda = state.chi / alpha;
    double theta = std::sqrt(state.mse / alpha);

    if (!std::isfinite(lambda) || !std::isfinite(theta)) {
        next = state;
        next.t = state.t + 1;
        next.diverged = true;
        return next;
    }

    if (lambda == 0.0 && denoiser == DenoiserKind::LogSum) {
        // Identity denoiser: the error is the effective noise itself.
        next.mse = theta * theta;
        next.chi = 0.0;
        return next;
    }

    ThresholdFn fn_storage{LogSumParams(1.0, 1.0)};
    ScalarDenoiser den{denoiser, lambda, nullptr};
    if (denoiser == DenoiserKind::LogSum) {
        double eps = schedule.epsilon_for(lambda);
        if (!(eps > 0.0) || !std::isfinite(eps)) {
            next = state;
            next.t = state.t + 1;
            next.diverged = true;
            return next;
        }
        fn_storage = ThresholdFn(LogSumParams(lambda, eps));
        den.fn = &fn_storage;
    }

    Moments m = mixture_moments(theta, rho, den, quad);
    next.mse = m.mse;
    next.chi = lambda * m.deriv;

    if (!std::isfinite(next.mse) || !std::isfinite(next.chi)) next.diverged = true;
    return next;
}

RunReport se_run(double alpha, double rho, const Schedule& schedule, SeState state,
                 const SeStoppingRule& stop, const Quadrature& quad, DenoiserKind denoiser) {
    RunReport report;

    auto record = [&](const SeState& s) {
        double lambda = s.chi / alpha;
        double eps = 0.0;
        double ratio = 0.0;
        if (denoiser == DenoiserKind::LogSum && lambda > 0.0) {
            eps = schedule.epsilon_for(lambda);
            double chi_c = eps * eps * alpha;
            ratio = chi_c > 0.0 ? s.chi / chi_c : 0.0;
        }
        report.trajectory.push_back({s.t, s.mse, s.chi, ratio, eps});
    };

    record(state);
    for (int t = 0; t < stop.t_max; ++t) {
        if (state.mse < stop.mse_low) {
            report.status = RunStatus::Converged;
            report.iterations = state.t;
            return report;
        }
        if (state.mse > stop.mse_high || state.diverged) {
            report.status = RunStatus::Diverged;
            report.iterations = state.t;
            return report;
        }
        state = se_step(state, alpha, rho, schedule, quad, denoiser);
        record(state);
    }
    report.iterations = state.t;
    if (state.mse < stop.mse_low)
        report.status = RunStatus::Converged;
    else if (state.mse > stop.mse_high || state.diverged)
        report.status = RunStatus::Diverged;
    else
        report.status = RunStatus::MaxIters;
    return report;
}

std::vector<FieldNode> vector_field(double alpha, double rho, const Schedule& schedule,
                                    const std::vector<double>& mse_values,
                                    const std::vector<double>& chi_values, const Quadrature& quad,
                                    DenoiserKind denoiser) {
    std::vector<FieldNode> field;
    field.reserve(mse_values.size() * chi_values.size() + 1);
    for (double m : mse_values) {
        for (double c : chi_values) {
            if (!(m > 0.0) || !(c > 0.0))
                throw std::invalid_argument("vector_field: grid values must be positive");
            SeState s{m, c, 0, false};
            SeState nxt = se_step(s, alpha, rho, schedule, quad, denoiser);
            double dm = nxt.mse - m;
            double dc = nxt.chi - c;
            field.push_back({m, c, dm, dc, std::sqrt(dm * dm + dc * dc)});
        }
    }
    field.push_back({0.0, 0.0, 0.0, 0.0, 0.0});
    return field;
}

std::vector<FixedPoint> stable_fixed_points(double alpha, double rho, const Schedule& schedule,
                                            const Quadrature& quad,
                                            const std::vector<SeState>& inits, int t_max,
                                            DenoiserKind denoiser) {
    if (inits.empty()) throw std::invalid_argument("stable_fixed_points: inits must be nonempty");
    constexpr double kStepTol = 1e-10;
    constexpr double kDedupTol = 1e-6;
    constexpr double kBlowUp = 1e8;

    std::vector<FixedPoint> points;
    for (int idx = 0; idx < static_cast<int>(inits.size()); ++idx) {
        SeState s = inits[idx];
        bool settled = false;
        for (int t = 0; t < t_max; ++t) {
            SeState nxt = se_step(s, alpha, rho, schedule, quad, denoiser);
            if (nxt.diverged || nxt.mse > kBlowUp || nxt.chi > kBlowUp) {
                settled = false;
                s = nxt;
                break;
            }
            bool done = std::abs(nxt.mse - s.mse) < kStepTol && std::abs(nxt.chi - s.chi) < kStepTol;
            s = nxt;
            if (done) {
                settled = true;
                break;
            }
        }
        if (!settled) continue;
        bool merged = false;
        for (auto& p : points) {
            if (std::abs(p.state.mse - s.mse) < kDedupTol && std::abs(p.state.chi - s.chi) < kDedupTol) {
                p.reached_from.push_back(idx);
                merged = true;
                break;
            }
        }
        if (!merged) points.push_back({s, {idx}});
    }
    return points;
}

}  // namespace logsum
