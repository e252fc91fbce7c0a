// Benchmark harness: kernel tables, plans, estimator checks, single runs and sweeps.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zoabsgd/bench.hpp"

namespace {

using namespace zoabsgd;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDivergence = 2;
constexpr int kExitConfig = 3;

// Run-config flags, stored as text and applied over the config file.
struct RunFlags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    options[key] = app->add_option(flag, values[key], help);
  }

  void add_all(CLI::App* app) {
    add(app, "--problem", "problem", "problem name, e.g. quadratic-d2-cond10 or quartic-mix-d4");
    add(app, "--beta", "beta", "smoothness order of the kernel");
    add(app, "--batch", "batch", "batch size B (default round(4 d kappa))");
    add(app, "--noise-kind", "noise.kind", "none | uniform | gaussian-clipped | constant");
    add(app, "--delta", "noise.delta", "noise level");
    add(app, "--eps", "eps", "target accuracy");
    add(app, "--iterations", "iterations", "iteration count override");
    add(app, "--h", "h", "smoothing parameter override");
    add(app, "--c-h", "c_h", "tuning constant applied to the planned h");
    add(app, "--c0", "c0", "initial gap estimate (default f(x0) - f*)");
    add(app, "--x0-scale", "x0_scale", "distance of x0 from the minimizer");
    add(app, "--gradient-at", "gradient_at", "x | y");
    add(app, "--threads", "threads", "workers for one batch");
    add(app, "--reduction", "reduction", "sequential | parallel");
    add(app, "--timing", "timing", "record wall_ns in traces (true | false)");
    add(app, "--output", "output", "output path prefix");
  }
};

struct Globals {
  std::string config;
  std::string seed;
  CLI::Option* seed_opt = nullptr;
};

RunConfig build_config(const Globals& g, const RunFlags& flags) {
  RunConfig cfg;
  if (!g.config.empty()) load_config_file(cfg, g.config);
  for (const auto& [key, opt] : flags.options) {
    if (opt->count() > 0) apply_setting(cfg, key, flags.values.at(key));
  }
  if (g.seed_opt->count() > 0) apply_setting(cfg, "seed", g.seed);
  cfg.validate();
  return cfg;
}

void print(const json& j) { std::cout << j.dump(2) << std::endl; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zoabsgd-bench: zero-order accelerated batched SGD harness"};
  app.set_help_flag("--help", "print help and exit");  // -h is taken by the smoothing parameter
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config, "flat key = value config file; flags win");
  g.seed_opt = app.add_option("--seed", g.seed, "random seed (u64)");

  // kernel-info
  auto* kernel_cmd = app.add_subcommand("kernel-info", "kernel coefficients, kappa, kappa_beta and moments");
  double k_beta = 2.0;
  kernel_cmd->add_option("--beta", k_beta, "smoothness order")->required();

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "parameters for a target accuracy");
  double p_beta = 2.0, p_mu = 1.0, p_L = 1.0, p_eps = 1e-4, p_delta = 0.0, p_c_h = 1.0, p_c0 = 1.0;
  int p_dim = 2;
  std::size_t p_batch = 0;
  plan_cmd->add_option("--beta", p_beta)->required();
  plan_cmd->add_option("--dim", p_dim)->required();
  plan_cmd->add_option("--mu", p_mu)->required();
  plan_cmd->add_option("--L", p_L)->required();
  plan_cmd->add_option("--eps", p_eps)->required();
  auto* p_batch_opt = plan_cmd->add_option("--batch", p_batch, "batch size");
  auto* p_delta_opt = plan_cmd->add_option("--delta", p_delta, "noise level to tolerate; picks the batch");
  p_batch_opt->excludes(p_delta_opt);
  plan_cmd->add_option("--c-h", p_c_h, "tuning constant for h");
  plan_cmd->add_option("--c0", p_c0, "initial gap estimate");

  // estimate-check
  auto* est_cmd = app.add_subcommand("estimate-check", "Monte-Carlo bias and second moment of the estimator");
  std::string e_problem = "quadratic-d2-cond10", e_noise = "uniform";
  double e_beta = 2.0, e_h = 0.1, e_delta = 0.0, e_x0_scale = 1.0;
  std::uint64_t e_samples = 100000;
  unsigned e_threads = 0;
  est_cmd->add_option("--problem", e_problem)->required();
  est_cmd->add_option("--beta", e_beta)->required();
  est_cmd->add_option("--h", e_h)->required();
  est_cmd->add_option("--delta", e_delta);
  est_cmd->add_option("--noise-kind", e_noise);
  est_cmd->add_option("--samples", e_samples);
  est_cmd->add_option("--x0-scale", e_x0_scale, "evaluation point x* + scale * ones / sqrt(d)");
  est_cmd->add_option("--threads", e_threads, "workers (0 = all cores)");

  // run
  auto* run_cmd = app.add_subcommand("run", "one run; prints the summary JSON");
  RunFlags run_flags;
  run_flags.add_all(run_cmd);

  // sweeps
  SweepOptions sweep;
  auto add_sweep = [&](CLI::App* cmd) {
    cmd->add_option("--seeds", sweep.seeds, "seeds per point");
    cmd->add_option("--jobs", sweep.threads, "concurrent runs (0 = all cores)");
    cmd->add_option("--table", sweep.output, "CSV table to append to");
  };

  auto* sb_cmd = app.add_subcommand("sweep-batch", "plateau across batch sizes");
  RunFlags sb_flags;
  sb_flags.add_all(sb_cmd);
  std::vector<std::size_t> sb_batches;
  sb_cmd->add_option("--batches", sb_batches, "batch sizes")->required()->delimiter(',');
  add_sweep(sb_cmd);

  auto* sn_cmd = app.add_subcommand("sweep-noise", "success rate across noise levels");
  RunFlags sn_flags;
  sn_flags.add_all(sn_cmd);
  std::vector<double> sn_deltas;
  bool sn_relative = false;
  double sn_fraction = 0.5;
  sn_cmd->add_option("--deltas", sn_deltas, "ascending noise levels")->required()->delimiter(',');
  sn_cmd->add_flag("--relative", sn_relative, "deltas are multiples of the planned delta_max");
  sn_cmd->add_option("--success-fraction", sn_fraction, "success rate below which the threshold is placed");
  add_sweep(sn_cmd);

  auto* rs_cmd = app.add_subcommand("rate-study", "iterations to eps across a problem family");
  RunFlags rs_flags;
  rs_flags.add_all(rs_cmd);
  RateOptions rate;
  bool rs_linear = false;
  rs_cmd->add_option("--pattern", rate.pattern, "problem name with a {} placeholder");
  rs_cmd->add_option("--values", rate.values, "values substituted into the pattern")->delimiter(',');
  rs_cmd->add_flag("--linear-axis", rs_linear, "regress on the value itself instead of its square root");
  rs_cmd->add_option("--factor", rate.iteration_factor, "run length as a multiple of the planned N");
  add_sweep(rs_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (kernel_cmd->parsed()) {
      print(to_json(build_kernel(k_beta)));
    } else if (plan_cmd->parsed()) {
      std::size_t B = p_batch_opt->count() ? p_batch : batch_threshold(p_beta, p_dim);
      if (p_delta_opt->count()) B = batch_for_noise(p_beta, p_dim, p_mu, p_eps, p_delta);
      print(to_json(plan(p_beta, p_dim, p_mu, p_L, p_eps, B, p_c_h, p_c0)));
    } else if (est_cmd->parsed()) {
      RunConfig cfg;
      if (!g.config.empty()) load_config_file(cfg, g.config);
      if (g.seed_opt->count()) apply_setting(cfg, "seed", g.seed);
      const ProblemPtr p = make_problem(e_problem);
      EstimatorConfig ec;
      ec.h = e_h;
      ec.kernel = build_kernel(e_beta);
      ZeroOrderOracle oracle(p, NoiseModel{parse_noise_kind(e_noise), e_delta});
      const Vector x = p->x_star() + Vector::Constant(p->dim(), e_x0_scale / std::sqrt(double(p->dim())));
      json out = to_json(certify_moments(oracle, ec, x, e_samples, cfg.seed, e_threads));
      out["seed"] = cfg.seed;
      out["version"] = std::string(version());
      print(out);
    } else if (run_cmd->parsed()) {
      const RunResult r = run_zoabsgd(build_config(g, run_flags));
      print(to_json(r.summary));
      return r.summary.diverged ? kExitDivergence : kExitOk;
    } else if (sb_cmd->parsed()) {
      const RunConfig cfg = build_config(g, sb_flags);
      json rows = json::array();
      for (const BatchRow& r : sweep_batch(cfg, sb_batches, sweep)) {
        rows.push_back({{"B", r.B}, {"plateau", r.plateau}, {"N", r.N}, {"T", r.T}, {"delta_max", r.delta_max}});
      }
      print({{"version", std::string(version())}, {"config", to_json(cfg)}, {"seeds", sweep.seeds}, {"rows", rows}});
    } else if (sn_cmd->parsed()) {
      const RunConfig cfg = build_config(g, sn_flags);
      std::vector<double> deltas = sn_deltas;
      if (sn_relative) {
        const double dm = plan_for(cfg).delta_max;
        for (double& d : deltas) d *= dm;
      }
      const NoiseSweep s = sweep_noise(cfg, deltas, sweep, sn_fraction);
      json rows = json::array();
      for (const NoiseRow& r : s.rows) {
        rows.push_back({{"delta", r.delta}, {"success_rate", r.success_rate}, {"plateau", r.plateau}, {"runs", r.runs}});
      }
      print({{"version", std::string(version())},
             {"config", to_json(cfg)},
             {"delta_max", s.delta_max},
             {"threshold", s.threshold ? json(*s.threshold) : json(nullptr)},
             {"rows", rows}});
    } else if (rs_cmd->parsed()) {
      const RunConfig cfg = build_config(g, rs_flags);
      rate.sqrt_axis = !rs_linear;
      const RateStudy s = rate_study(cfg, rate, sweep);
      json rows = json::array();
      for (const RatePoint& p : s.points) {
        rows.push_back({{"value", p.value},
                        {"x", p.x},
                        {"problem", p.problem},
                        {"iterations_to_eps", p.iterations_to_eps},
                        {"planned_N", p.planned_N},
                        {"B", p.batch},
                        {"T", p.T},
                        {"hits", p.hits}});
      }
      print({{"version", std::string(version())}, {"config", to_json(cfg)}, {"exponent", s.exponent}, {"rows", rows}});
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}
