// Command-line front end: emits figure-backing data as CSV/JSON.
#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "logsum/amp.hpp"
#include "logsum/csv.hpp"
#include "logsum/model.hpp"
#include "logsum/phase.hpp"
#include "logsum/prox.hpp"
#include "logsum/replica.hpp"
#include "logsum/se.hpp"

namespace {

using logsum::format_double;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    if (const char* dir = std::getenv("LOGSUM_OUTPUT_DIR")) {
        return (std::filesystem::path(dir) / p).string();
    }
    return path;
}

void write_file(const std::string& path, const std::string& content) {
    std::string full = resolve_output(path);
    std::ofstream os(full, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + full);
    os << content;
    if (!os) throw std::runtime_error("write failed for " + full);
    std::cerr << "wrote " << full << "\n";
}

using Meta = std::vector<std::pair<std::string, std::string>>;

std::string join(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += format_double(v[i]);
    }
    return out;
}

// Shared schedule flags: --epsilon selects a fixed width, --delta-epsilon the
// adaptive rule; exactly one applies, adaptive(0) when neither is given.
struct ScheduleFlags {
    double epsilon = 0.0;
    double delta_epsilon = 0.0;
    bool has_epsilon = false;
    bool has_delta = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--epsilon", epsilon, "Fixed smoothing width")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--delta-epsilon", delta_epsilon,
                        "Adaptive schedule offset from the convexity edge");
    }
    logsum::Schedule build(const CLI::App* cmd) {
        has_epsilon = cmd->count("--epsilon") > 0;
        has_delta = cmd->count("--delta-epsilon") > 0;
        if (has_epsilon && has_delta)
            throw CLI::ValidationError("--epsilon and --delta-epsilon are mutually exclusive");
        if (has_epsilon) return logsum::Schedule::fixed(epsilon);
        return logsum::Schedule::adaptive(delta_epsilon);
    }
    void describe(Meta& meta) const {
        if (has_epsilon) {
            meta.emplace_back("schedule", "fixed");
            meta.emplace_back("epsilon", format_double(epsilon));
        } else {
            meta.emplace_back("schedule", "adaptive");
            meta.emplace_back("delta_epsilon", format_double(delta_epsilon));
        }
    }
};

// Flat key=value config files, applied after the command line with lower
// precedence (defaults < config < flags). CLI11's own set_config is only
// processed on the top-level app, so subcommand configs are handled here.
std::map<const CLI::App*, std::string> g_config_paths;

void add_config_option(CLI::App* cmd) {
    cmd->add_option("--config", g_config_paths[cmd],
                    "Flat key=value file; command-line flags take precedence");
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

void apply_config(CLI::App* cmd) {
    const std::string& path = g_config_paths[cmd];
    if (cmd->count("--config") == 0) return;
    std::ifstream is(path);
    if (!is) throw CLI::ValidationError("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError(path + ":" + std::to_string(lineno) +
                                       ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key == "config")
            throw CLI::ValidationError(path + ": config files cannot nest");
        CLI::Option* opt = cmd->get_option_no_throw("--" + key);
        if (opt == nullptr)
            throw CLI::ValidationError(path + ": unknown config key " + key);
        if (opt->count() > 0) continue;  // command line wins
        std::istringstream vs(value);
        std::string tok;
        bool any = false;
        while (std::getline(vs >> std::ws, tok, ' ')) {
            if (!tok.empty()) {
                opt->add_result(tok);
                any = true;
            }
        }
        if (!any) throw CLI::ValidationError(path + ": empty value for key " + key);
        opt->run_callback();
    }
}

logsum::DenoiserKind parse_denoiser(const std::string& name) {
    if (name == "logsum") return logsum::DenoiserKind::LogSum;
    if (name == "l1") return logsum::DenoiserKind::Soft;
    throw CLI::ValidationError("--denoiser must be logsum or l1");
}

// ---------------------------------------------------------------------------

int cmd_prox_eval(double lambda, std::vector<double> epsilons, double x_min, double x_max,
                  double x_step, const std::string& output) {
    if (!(x_step > 0.0) || !(x_max > x_min)) throw CLI::ValidationError("bad x grid");
    if (epsilons.empty()) {
        double s = std::sqrt(lambda);
        epsilons = {s / 4.0, s / 2.0, s, 2.0 * s, 4.0 * s};
    }
    std::ostringstream os;
    Meta meta{{"command", "prox-eval"},
              {"lambda", format_double(lambda)},
              {"epsilons", join(epsilons)},
              {"x_min", format_double(x_min)},
              {"x_max", format_double(x_max)},
              {"x_step", format_double(x_step)}};
    logsum::write_metadata(os, meta);
    logsum::write_row(os, {"x", "epsilon", "S", "S_prime", "regime"});
    long steps = static_cast<long>(std::llround((x_max - x_min) / x_step));
    for (double eps : epsilons) {
        logsum::ThresholdFn fn(logsum::LogSumParams(lambda, eps));
        const char* regime = fn.convex() ? "CONVEX" : "NONCONVEX";
        for (long i = 0; i <= steps; ++i) {
            double x = x_min + i * x_step;
            logsum::ProxResult r = fn(x);
            logsum::write_row(os, {format_double(x), format_double(eps), format_double(r.value),
                                   format_double(r.derivative), regime});
        }
    }
    write_file(output, os.str());
    return 0;
}

int cmd_amp_run(double alpha, double rho, int n, std::uint64_t seed, std::uint64_t instance,
                logsum::Schedule sched, const ScheduleFlags& sf, logsum::DenoiserKind den,
                const logsum::StoppingRule& stop, const std::string& output) {
    logsum::ProblemSpec spec{n, alpha, rho, seed};
    logsum::ProblemInstance inst = logsum::generate(spec, instance);
    logsum::AmpOptions opts;
    opts.denoiser = den;
    logsum::RunReport rep =
        logsum::run(inst, sched, logsum::AmpState::init(inst), stop, opts);

    std::ostringstream os;
    Meta meta{{"command", "amp-run"},
              {"alpha", format_double(alpha)},
              {"rho", format_double(rho)},
              {"n", std::to_string(n)},
              {"seed", std::to_string(seed)},
              {"instance", std::to_string(instance)},
              {"denoiser", den == logsum::DenoiserKind::LogSum ? "logsum" : "l1"},
              {"t_max", std::to_string(stop.t_max)},
              {"mse_converge", format_double(stop.mse_converge)},
              {"mse_diverge", format_double(stop.mse_diverge)},
              {"stall_window", std::to_string(stop.stall_window)}};
    sf.describe(meta);
    meta.emplace_back("status", logsum::to_string(rep.status));
    meta.emplace_back("iterations", std::to_string(rep.iterations));
    meta.emplace_back("k_clamped", rep.k_clamped ? "1" : "0");
    logsum::write_metadata(os, meta);
    logsum::write_row(os, {"t", "mse", "chi", "chi_over_chi_c", "epsilon_t"});
    for (const auto& p : rep.trajectory) {
        logsum::write_row(os, {std::to_string(p.t), format_double(p.mse), format_double(p.chi),
                               format_double(p.chi_over_chi_c), format_double(p.epsilon_t)});
    }
    write_file(output, os.str());
    return 0;
}

int cmd_se_run(double alpha, double rho, logsum::Schedule sched, const ScheduleFlags& sf,
               logsum::DenoiserKind den, double mse0, double chi0,
               const logsum::SeStoppingRule& stop, const logsum::Quadrature& quad,
               const std::string& output) {
    logsum::RunReport rep =
        logsum::se_run(alpha, rho, sched, logsum::SeState{mse0, chi0, 0, false}, stop, quad, den);

    std::ostringstream os;
    Meta meta{{"command", "se-run"},
              {"alpha", format_double(alpha)},
              {"rho", format_double(rho)},
              {"denoiser", den == logsum::DenoiserKind::LogSum ? "logsum" : "l1"},
              {"mse0", format_double(mse0)},
              {"chi0", format_double(chi0)},
              {"t_max", std::to_string(stop.t_max)},
              {"mse_low", format_double(stop.mse_low)},
              {"mse_high", format_double(stop.mse_high)},
              {"success", format_double(stop.success)},
              {"hermite_nodes", std::to_string(quad.hermite_nodes())},
              {"xi_abs_tol", format_double(quad.xi_abs_tol())}};
    sf.describe(meta);
    meta.emplace_back("status", logsum::to_string(rep.status));
    logsum::write_metadata(os, meta);
    logsum::write_row(os, {"t", "mse", "chi", "epsilon_t", "status"});
    for (std::size_t i = 0; i < rep.trajectory.size(); ++i) {
        const auto& p = rep.trajectory[i];
        const char* status =
            (i + 1 == rep.trajectory.size()) ? logsum::to_string(rep.status) : "RUNNING";
        logsum::write_row(os, {std::to_string(p.t), format_double(p.mse), format_double(p.chi),
                               format_double(p.epsilon_t), status});
    }
    write_file(output, os.str());
    return 0;
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1 || !(hi >= lo)) throw CLI::ValidationError("bad grid range");
    std::vector<double> out;
    if (count == 1) return {lo};
    for (int i = 0; i < count; ++i) out.push_back(lo + (hi - lo) * i / (count - 1));
    return out;
}

int cmd_se_field(double alpha, double rho, logsum::Schedule sched, const ScheduleFlags& sf,
                 double mse_min, double mse_max, int mse_count, double chi_min, double chi_max,
                 int chi_count, const logsum::Quadrature& quad, const std::string& output,
                 const std::string& fp_output) {
    std::vector<double> ms = linspace(mse_min, mse_max, mse_count);
    std::vector<double> cs = linspace(chi_min, chi_max, chi_count);
    auto field = logsum::vector_field(alpha, rho, sched, ms, cs, quad);

    Meta meta{{"command", "se-field"},
              {"alpha", format_double(alpha)},
              {"rho", format_double(rho)},
              {"mse_min", format_double(mse_min)},
              {"mse_max", format_double(mse_max)},
              {"mse_count", std::to_string(mse_count)},
              {"chi_min", format_double(chi_min)},
              {"chi_max", format_double(chi_max)},
              {"chi_count", std::to_string(chi_count)},
              {"hermite_nodes", std::to_string(quad.hermite_nodes())}};
    sf.describe(meta);

    std::ostringstream os;
    logsum::write_metadata(os, meta);
    logsum::write_row(os, {"mse", "chi", "d_mse", "d_chi", "magnitude"});
    for (const auto& node : field) {
        logsum::write_row(os, {format_double(node.mse), format_double(node.chi),
                               format_double(node.d_mse), format_double(node.d_chi),
                               format_double(node.magnitude)});
    }
    write_file(output, os.str());

    std::vector<logsum::SeState> inits{{rho, 1.0, 0, false}, {1e-8, 1e-8, 0, false}};
    auto fps = logsum::stable_fixed_points(alpha, rho, sched, quad, inits);
    std::ostringstream fs;
    logsum::write_metadata(fs, meta);
    logsum::write_row(fs, {"mse", "chi", "stable", "reached_from"});
    for (const auto& fp : fps) {
        std::string from;
        for (std::size_t i = 0; i < fp.reached_from.size(); ++i) {
            if (i) from += ';';
            from += std::to_string(fp.reached_from[i]);
        }
        logsum::write_row(fs, {format_double(fp.state.mse), format_double(fp.state.chi), "1",
                               from});
    }
    write_file(fp_output, fs.str());
    return 0;
}

int cmd_phase_boundary(const std::vector<double>& rhos, const std::string& method_name,
                       double epsilon, bool has_epsilon, double alpha_tol, bool audit,
                       const logsum::Quadrature& quad, const std::string& output) {
    logsum::BoundaryQuery q;
    q.rho_grid = rhos;
    if (method_name == "se_adaptive")
        q.method = logsum::BoundaryMethod::SeAdaptive;
    else if (method_name == "se_l1")
        q.method = logsum::BoundaryMethod::SeL1;
    else if (method_name == "analytic_fixed_eps")
        q.method = logsum::BoundaryMethod::AnalyticFixedEps;
    else if (method_name == "it_limit")
        q.method = logsum::BoundaryMethod::ItLimit;
    else
        throw CLI::ValidationError("unknown --method " + method_name);
    if (has_epsilon) q.epsilon = epsilon;
    q.alpha_tolerance = alpha_tol;
    q.audit = audit;

    auto pts = logsum::boundary(q, quad);

    std::ostringstream os;
    Meta meta{{"command", "phase-boundary"},
              {"method", method_name},
              {"rhos", join(rhos)},
              {"alpha_tolerance", format_double(alpha_tol)},
              {"audit", audit ? "1" : "0"}};
    if (has_epsilon) meta.emplace_back("epsilon", format_double(epsilon));
    logsum::write_metadata(os, meta);
    logsum::write_row(os, {"rho", "alpha_c", "method", "epsilon", "saturated"});
    for (const auto& p : pts) {
        logsum::write_row(os, {format_double(p.rho), format_double(p.alpha_c), method_name,
                               has_epsilon ? format_double(epsilon) : "0",
                               p.saturated ? "1" : "0"});
    }
    write_file(output, os.str());
    return 0;
}

int cmd_bench(const logsum::BenchConfig& cfg, const std::string& output) {
    auto rows = logsum::convergence_bench(cfg);
    std::ostringstream os;
    Meta meta{{"command", "bench"},
              {"rho", format_double(cfg.rho)},
              {"alphas", join(cfg.alpha_grid)},
              {"n", std::to_string(cfg.n)},
              {"seeds", std::to_string(cfg.seeds)},
              {"base_seed", std::to_string(cfg.base_seed)},
              {"t_max", std::to_string(cfg.t_max)},
              {"stall_window", std::to_string(cfg.stall_window)},
              {"jobs", std::to_string(cfg.jobs)}};
    logsum::write_metadata(os, meta);
    logsum::write_row(os, {"alpha", "denoiser", "mean_tau", "stderr", "n_converged", "n_failed"});
    for (const auto& r : rows) {
        logsum::write_row(os, {format_double(r.alpha), r.denoiser, format_double(r.mean_tau),
                               format_double(r.stderr_tau), std::to_string(r.n_converged),
                               std::to_string(r.n_failed)});
    }
    write_file(output, os.str());
    return 0;
}

int cmd_replica_alphac(double rho, double epsilon, double alpha_tol,
                       const logsum::Quadrature& quad, const std::string& output) {
    double ac = logsum::alpha_c(rho, epsilon, alpha_tol);
    auto sol = logsum::chi_hat_selfconsistent(std::min(ac + alpha_tol, 1.0 - 1e-12), rho, epsilon);
    if (!sol) throw NumericalFailure("no self-consistent solution just above alpha_c");

    nlohmann::json out;
    out["build"] = logsum::build_id();
    out["config"] = {{"command", "replica-alphac"},
                     {"rho", rho},
                     {"epsilon", epsilon},
                     {"alpha_tolerance", alpha_tol},
                     {"hermite_nodes", quad.hermite_nodes()}};
    out["alpha_c"] = ac;
    out["u_star"] = sol->u_star;
    out["f_prime"] = sol->f_prime;
    out["stable"] = sol->stable;
    out["dat_limit"] = logsum::dat_expectation_limit(sol->u_star, rho);

    write_file(output, out.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compressed sensing with log-sum thresholding: AMP, state evolution and "
                 "replica phase boundaries"};
    app.require_subcommand(1);
    int jobs = 1;
    int hermite_nodes = 101;
    app.add_option("--jobs", jobs, "Worker thread bound")->check(CLI::PositiveNumber);
    app.add_option("--hermite-nodes", hermite_nodes, "Signal-average quadrature nodes (odd)");

    // prox-eval ------------------------------------------------------------
    auto* prox = app.add_subcommand("prox-eval", "Tabulate the thresholding function");
    add_config_option(prox);
    double lambda = 4.0, x_min = -10.0, x_max = 10.0, x_step = 1e-2;
    std::vector<double> epsilons;
    std::string prox_out = "prox.csv";
    prox->add_option("--lambda", lambda)->check(CLI::NonNegativeNumber);
    prox->add_option("--epsilons", epsilons, "Smoothing widths (default spans the regimes)");
    prox->add_option("--x-min", x_min);
    prox->add_option("--x-max", x_max);
    prox->add_option("--x-step", x_step);
    prox->add_option("--output", prox_out);

    // amp-run --------------------------------------------------------------
    auto* amp = app.add_subcommand("amp-run", "Run AMP on one random instance");
    add_config_option(amp);
    double a_alpha = 0.5, a_rho = 0.2;
    int a_n = 10000;
    std::uint64_t a_seed = 1, a_instance = 0;
    std::string a_den = "logsum", amp_out = "amp.csv";
    logsum::StoppingRule a_stop;
    ScheduleFlags a_sf;
    amp->add_option("--alpha", a_alpha);
    amp->add_option("--rho", a_rho);
    amp->add_option("--n", a_n)->check(CLI::PositiveNumber);
    amp->add_option("--seed", a_seed);
    amp->add_option("--instance", a_instance);
    amp->add_option("--denoiser", a_den)->check(CLI::IsMember({"logsum", "l1"}));
    amp->add_option("--t-max", a_stop.t_max)->check(CLI::PositiveNumber);
    amp->add_option("--mse-converge", a_stop.mse_converge);
    amp->add_option("--mse-diverge", a_stop.mse_diverge);
    amp->add_option("--stall-window", a_stop.stall_window);
    a_sf.attach(amp);
    amp->add_option("--output", amp_out);

    // se-run ---------------------------------------------------------------
    auto* se = app.add_subcommand("se-run", "Iterate the macroscopic recursion");
    add_config_option(se);
    double s_alpha = 0.5, s_rho = 0.2, s_mse0 = -1.0, s_chi0 = 1.0;
    std::string s_den = "logsum", se_out = "se.csv";
    logsum::SeStoppingRule s_stop;
    ScheduleFlags s_sf;
    se->add_option("--alpha", s_alpha);
    se->add_option("--rho", s_rho);
    se->add_option("--mse0", s_mse0, "Initial MSE (default: rho)");
    se->add_option("--chi0", s_chi0);
    se->add_option("--denoiser", s_den)->check(CLI::IsMember({"logsum", "l1"}));
    se->add_option("--t-max", s_stop.t_max)->check(CLI::PositiveNumber);
    se->add_option("--mse-low", s_stop.mse_low);
    se->add_option("--mse-high", s_stop.mse_high);
    se->add_option("--success", s_stop.success);
    s_sf.attach(se);
    se->add_option("--output", se_out);

    // se-field -------------------------------------------------------------
    auto* field = app.add_subcommand("se-field", "Macroscopic vector field and fixed points");
    add_config_option(field);
    double f_alpha = 0.38, f_rho = 0.2;
    double f_mse_min = 0.01, f_mse_max = 0.4, f_chi_min = 0.05, f_chi_max = 1.2;
    int f_mse_count = 20, f_chi_count = 20;
    std::string field_out = "field.csv", fp_out = "fixed_points.csv";
    ScheduleFlags f_sf;
    field->add_option("--alpha", f_alpha);
    field->add_option("--rho", f_rho);
    field->add_option("--mse-min", f_mse_min);
    field->add_option("--mse-max", f_mse_max);
    field->add_option("--mse-count", f_mse_count);
    field->add_option("--chi-min", f_chi_min);
    field->add_option("--chi-max", f_chi_max);
    field->add_option("--chi-count", f_chi_count);
    f_sf.attach(field);
    field->add_option("--output", field_out);
    field->add_option("--fixed-points-output", fp_out);

    // phase-boundary -------------------------------------------------------
    auto* phase = app.add_subcommand("phase-boundary", "Reconstruction boundary over rho");
    add_config_option(phase);
    std::vector<double> p_rhos{0.1, 0.2, 0.3, 0.4};
    std::string p_method = "se_adaptive", phase_out = "boundary.csv";
    double p_eps = 1.0, p_tol = 1e-3;
    bool p_audit = false;
    phase->add_option("--rhos", p_rhos);
    phase->add_option("--method", p_method)
        ->check(CLI::IsMember({"se_adaptive", "se_l1", "analytic_fixed_eps", "it_limit"}));
    phase->add_option("--epsilon", p_eps);
    phase->add_option("--alpha-tol", p_tol);
    phase->add_flag("--audit", p_audit);
    phase->add_option("--output", phase_out);

    // bench ----------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "Convergence-time benchmark");
    add_config_option(bench);
    logsum::BenchConfig b_cfg;
    b_cfg.alpha_grid = {0.5, 0.8, 0.9, 1.0};
    std::string bench_out = "bench.csv";
    bench->add_option("--rho", b_cfg.rho);
    bench->add_option("--alphas", b_cfg.alpha_grid);
    bench->add_option("--n", b_cfg.n)->check(CLI::PositiveNumber);
    bench->add_option("--seeds", b_cfg.seeds);
    bench->add_option("--base-seed", b_cfg.base_seed);
    bench->add_option("--t-max", b_cfg.t_max);
    bench->add_option("--stall-window", b_cfg.stall_window);
    bench->add_option("--output", bench_out);

    // replica-alphac -------------------------------------------------------
    auto* rep = app.add_subcommand("replica-alphac", "Analytic reconstruction threshold");
    add_config_option(rep);
    double r_rho = 0.2, r_eps = 1.0, r_tol = 1e-7;
    std::string rep_out = "alphac.json";
    rep->add_option("--rho", r_rho);
    rep->add_option("--epsilon", r_eps)->check(CLI::PositiveNumber);
    rep->add_option("--alpha-tol", r_tol);
    rep->add_option("--output", rep_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        for (CLI::App* sub : app.get_subcommands()) apply_config(sub);
        logsum::Quadrature quad(hermite_nodes);
        if (prox->parsed())
            return cmd_prox_eval(lambda, epsilons, x_min, x_max, x_step, prox_out);
        if (amp->parsed())
            return cmd_amp_run(a_alpha, a_rho, a_n, a_seed, a_instance, a_sf.build(amp), a_sf,
                               parse_denoiser(a_den), a_stop, amp_out);
        if (se->parsed()) {
            if (se->count("--mse0") == 0) s_mse0 = s_rho;
            return cmd_se_run(s_alpha, s_rho, s_sf.build(se), s_sf, parse_denoiser(s_den), s_mse0,
                              s_chi0, s_stop, quad, se_out);
        }
        if (field->parsed())
            return cmd_se_field(f_alpha, f_rho, f_sf.build(field), f_sf, f_mse_min, f_mse_max,
                                f_mse_count, f_chi_min, f_chi_max, f_chi_count, quad, field_out,
                                fp_out);
        if (phase->parsed())
            return cmd_phase_boundary(p_rhos, p_method, p_eps, phase->count("--epsilon") > 0,
                                      p_tol, p_audit, quad, phase_out);
        if (bench->parsed()) {
            b_cfg.jobs = jobs;
            return cmd_bench(b_cfg, bench_out);
        }
        if (rep->parsed()) return cmd_replica_alphac(r_rho, r_eps, r_tol, quad, rep_out);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
