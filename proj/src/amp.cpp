#include "logsum/amp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "logsum/prox.hpp"

namespace logsum {

const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Converged: return "CONVERGED";
        case RunStatus::MaxIters: return "MAX_ITERS";
        case RunStatus::Diverged: return "DIVERGED";
    }
    return "UNKNOWN";
}

AmpState AmpState::init(const ProblemInstance& inst) {
    AmpState s;
    s.x_hat = Eigen::VectorXd::Zero(inst.spec.n);
    s.z = inst.y;
    s.chi = 1.0;
    s.t = 0;
    return s;
}

AmpState amp_step(const AmpState& state, const ProblemInstance& inst, const Schedule& schedule,
                  const AmpOptions& opts) {
    const double alpha = inst.spec.alpha;
    const int n = inst.spec.n;

    AmpState next = state;
    next.t = state.t + 1;

    Eigen::VectorXd h = state.x_hat + (1.0 / alpha) * (inst.a.transpose() * state.z);
    double lambda = state.chi / alpha;

    double deriv_sum = 0.0;
    if (opts.denoiser == DenoiserKind::Soft) {
        SoftDenoised d = soft_amp_denoiser(h, lambda);
        next.x_hat = std::move(d.values);
        deriv_sum = d.mean_derivative * n;
    } else {
        double eps = schedule.epsilon_for(lambda);
        if (!(eps > 0.0) || !std::isfinite(eps) || !std::isfinite(lambda)) {
            next.diverged = true;
            return next;
        }
        ThresholdFn fn(LogSumParams(lambda, eps));
        next.x_hat.resize(n);
        for (int i = 0; i < n; ++i) {
            ProxResult r = fn(h(i));
            next.x_hat(i) = r.value;
            deriv_sum += r.derivative;
        }
    }

    double k = deriv_sum / (alpha * n);
    if (!std::isfinite(k) || k > opts.k_max) {
        k = opts.k_max;
        next.k_clamped = true;
    }

    next.z = inst.y - inst.a * next.x_hat + state.z * k;
    next.chi = state.chi * k;

    if (!next.x_hat.allFinite() || !next.z.allFinite() || !std::isfinite(next.chi) ||
        !(next.chi > 0.0)) {
        next.diverged = true;
    }
    return next;
}

RunReport run(const ProblemInstance& inst, const Schedule& schedule, AmpState state,
              const StoppingRule& stop, const AmpOptions& opts) {
    const double alpha = inst.spec.alpha;
    RunReport report;

    auto record = [&](const AmpState& s) {
        double m = mse(s.x_hat, inst.x0);
        double lambda = s.chi / alpha;
        double eps = 0.0;
        double ratio = 0.0;
        if (opts.denoiser == DenoiserKind::LogSum) {
            eps = schedule.epsilon_for(lambda);
            double chi_c = eps * eps * alpha;
            ratio = chi_c > 0.0 ? s.chi / chi_c : 0.0;
        }
        report.trajectory.push_back({s.t, m, s.chi, ratio, eps});
        return m;
    };

    double best = record(state);
    int since_improvement = 0;

    for (int t = 0; t < stop.t_max; ++t) {
        state = amp_step(state, inst, schedule, opts);
        double m;
        if (state.diverged) {
            report.trajectory.push_back({state.t, std::numeric_limits<double>::infinity(),
                                         state.chi, 0.0, 0.0});
            report.status = RunStatus::Diverged;
            report.iterations = state.t;
            report.k_clamped = state.k_clamped;
            return report;
        }
        m = record(state);
        report.k_clamped = state.k_clamped;
        if (m < stop.mse_converge) {
            report.status = RunStatus::Converged;
            report.iterations = state.t;
            return report;
        }
        if (m > stop.mse_diverge) {
            report.status = RunStatus::Diverged;
            report.iterations = state.t;
            return report;
        }
        if (stop.stall_window > 0) {
            if (m < best * (1.0 - 1e-6)) {
                best = m;
                since_improvement = 0;
            } else if (++since_improvement >= stop.stall_window) {
                report.status = RunStatus::MaxIters;
                report.iterations = state.t;
                return report;
            }
        }
    }
    report.status = RunStatus::MaxIters;
    report.iterations = stop.t_max;
    return report;
}

SoftDenoised soft_amp_denoiser(const Eigen::VectorXd& h, double lambda) {
    SoftDenoised out;
    out.values.resize(h.size());
    double deriv = 0.0;
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        SoftResult r = soft_threshold(h(i), lambda);
        out.values(i) = r.value;
        deriv += r.derivative;
    }
    out.mean_derivative = h.size() > 0 ? deriv / static_cast<double>(h.size()) : 0.0;
    return out;
}

}  // namespace logsum
