#include "logsum/phase.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "logsum/amp.hpp"
#include "logsum/model.hpp"
#include "logsum/parallel.hpp"

namespace logsum {

const char* to_string(BoundaryMethod m) {
    switch (m) {
        case BoundaryMethod::SeAdaptive: return "se_adaptive";
        case BoundaryMethod::SeL1: return "se_l1";
        case BoundaryMethod::AnalyticFixedEps: return "analytic_fixed_eps";
        case BoundaryMethod::ItLimit: return "it_limit";
    }
    return "unknown";
}

const char* to_string(Phase p) {
    switch (p) {
        case Phase::Easy: return "EASY";
        case Phase::Hard: return "HARD";
        case Phase::Impossible: return "IMPOSSIBLE";
    }
    return "unknown";
}

namespace {

constexpr int kBisectionCap = 40;

bool se_success(double alpha, double rho, const Quadrature& quad, DenoiserKind denoiser) {
    Schedule sched = Schedule::adaptive(0.0);
    SeStoppingRule stop;
    RunReport rep = se_run(alpha, rho, sched, SeState{rho, 1.0, 0, false}, stop, quad, denoiser);
    return !rep.trajectory.empty() && rep.trajectory.back().mse < stop.success;
}

BoundaryPoint se_boundary_point(double rho, const BoundaryQuery& query, const Quadrature& quad) {
    DenoiserKind den = query.method == BoundaryMethod::SeL1 ? DenoiserKind::Soft
                                                            : DenoiserKind::LogSum;
    double tol = query.alpha_tolerance;
    double lo = rho + tol;
    double hi = 1.0 - 1e-9;
    if (se_success(lo, rho, quad, den)) return {rho, lo, true};
    if (!se_success(hi, rho, quad, den)) return {rho, hi, true};
    for (int it = 0; it < kBisectionCap && hi - lo > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (se_success(mid, rho, quad, den))
            hi = mid;
        else
            lo = mid;
    }
    double alpha_c = 0.5 * (lo + hi);
    if (query.audit) {
        // The bisection assumes a single success threshold in alpha; probe a few
        // interior points and log anything inconsistent with that.
        for (int j = 1; j <= 5; ++j) {
            double a = rho + tol + (1.0 - 2e-9 - rho - tol) * j / 6.0;
            bool ok = se_success(a, rho, quad, den);
            if (ok != (a >= alpha_c)) {
                std::cerr << "boundary audit: non-monotone predicate at rho=" << rho
                          << " alpha=" << a << " (threshold " << alpha_c << ")\n";
            }
        }
    }
    return {rho, alpha_c, false};
}

}  // namespace

std::vector<BoundaryPoint> boundary(const BoundaryQuery& query, const Quadrature& quad) {
    if (query.rho_grid.empty()) throw std::invalid_argument("boundary: empty rho grid");
    for (std::size_t i = 0; i + 1 < query.rho_grid.size(); ++i)
        if (!(query.rho_grid[i] < query.rho_grid[i + 1]))
            throw std::invalid_argument("boundary: rho grid must be strictly ascending");
    if (!(query.alpha_tolerance > 0.0))
        throw std::invalid_argument("boundary: alpha_tolerance must be > 0");
    if (query.method == BoundaryMethod::AnalyticFixedEps && !query.epsilon)
        throw std::invalid_argument("boundary: analytic method requires epsilon");

    std::vector<BoundaryPoint> out(query.rho_grid.size());
    for (std::size_t i = 0; i < query.rho_grid.size(); ++i) {
        double rho = query.rho_grid[i];
        switch (query.method) {
            case BoundaryMethod::ItLimit:
                out[i] = {rho, rho, false};
                break;
            case BoundaryMethod::AnalyticFixedEps:
                out[i] = {rho, alpha_c(rho, *query.epsilon), false};
                break;
            default:
                out[i] = se_boundary_point(rho, query, quad);
        }
    }
    return out;
}

PhaseLabel classify(double alpha, double rho, const Schedule& schedule, const Quadrature& quad) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("classify: alpha in (0,1)");
    const std::vector<SeState> inits = {
        SeState{rho, 1.0, 0, false},    // uninformed (paper initialization)
        SeState{1e-8, 1e-8, 0, false},  // informed probe of the origin's basin
    };
    auto points = stable_fixed_points(alpha, rho, schedule, quad, inits);

    constexpr double kOriginTol = 1e-6;
    auto is_origin = [&](const FixedPoint& p) {
        return p.state.mse < kOriginTol && p.state.chi < kOriginTol;
    };
    auto reached_by = [&](const FixedPoint& p, int idx) {
        for (int i : p.reached_from)
            if (i == idx) return true;
        return false;
    };

    PhaseLabel label;
    bool origin_attracting = false;
    bool uninformed_hits_origin = false;
    for (const auto& p : points) {
        label.fixed_points.emplace_back(p.state.mse, p.state.chi);
        if (is_origin(p)) {
            if (reached_by(p, 1)) origin_attracting = true;
            if (reached_by(p, 0)) uninformed_hits_origin = true;
        }
    }
    if (!origin_attracting)
        label.label = Phase::Impossible;
    else if (uninformed_hits_origin)
        label.label = Phase::Easy;
    else
        label.label = Phase::Hard;
    return label;
}

std::vector<BenchRow> convergence_bench(const BenchConfig& config) {
    if (config.seeds < 2) throw std::invalid_argument("convergence_bench: need seeds >= 2");
    const std::vector<DenoiserKind> denoisers = {DenoiserKind::LogSum, DenoiserKind::Soft};

    struct Job {
        double alpha;
        DenoiserKind den;
        int seed_idx;
    };
    std::vector<Job> jobs;
    for (double a : config.alpha_grid)
        for (DenoiserKind d : denoisers)
            for (int s = 0; s < config.seeds; ++s) jobs.push_back({a, d, s});

    std::vector<double> tau(jobs.size(), std::numeric_limits<double>::infinity());
    parallel_for(static_cast<int>(jobs.size()), config.jobs, [&](int i) {
        const Job& job = jobs[i];
        ProblemSpec spec{config.n, job.alpha, config.rho, config.base_seed};
        ProblemInstance inst = generate(spec, static_cast<std::uint64_t>(job.seed_idx));
        Schedule sched = Schedule::adaptive(0.0);
        StoppingRule stop;
        stop.t_max = config.t_max;
        stop.stall_window = config.stall_window;
        AmpOptions opts;
        opts.denoiser = job.den;
        RunReport rep = run(inst, sched, AmpState::init(inst), stop, opts);
        if (rep.status == RunStatus::Converged) tau[i] = rep.iterations;
    });

    std::vector<BenchRow> rows;
    std::size_t idx = 0;
    for (double a : config.alpha_grid) {
        for (DenoiserKind d : denoisers) {
            double sum = 0.0, sum_sq = 0.0;
            int ok = 0, fail = 0;
            for (int s = 0; s < config.seeds; ++s, ++idx) {
                double t = tau[idx];
                if (std::isfinite(t)) {
                    sum += t;
                    sum_sq += t * t;
                    ++ok;
                } else {
                    ++fail;
                }
            }
            BenchRow row;
            row.alpha = a;
            row.denoiser = d == DenoiserKind::LogSum ? "logsum_adaptive" : "l1";
            if (ok > 0) {
                row.mean_tau = sum / ok;
                double var = ok > 1 ? (sum_sq - sum * sum / ok) / (ok - 1) : 0.0;
                row.stderr_tau = std::sqrt(std::max(var, 0.0) / ok);
            } else {
                row.mean_tau = std::numeric_limits<double>::quiet_NaN();
                row.stderr_tau = std::numeric_limits<double>::quiet_NaN();
            }
            row.n_converged = ok;
            row.n_failed = fail;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace logsum
