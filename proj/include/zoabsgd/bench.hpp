#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zoabsgd/agd.hpp"
#include "zoabsgd/estimator.hpp"
#include "zoabsgd/oracle.hpp"
#include "zoabsgd/planner.hpp"

namespace zoabsgd {

/// Artifact version string embedded in every output file.
std::string_view version();

struct RunConfig {
  std::string problem = "quadratic-d2-cond10";
  double beta = 2.0;
  std::optional<std::size_t> batch;  // default: round(4 d kappa)
  NoiseKind noise_kind = NoiseKind::uniform;
  double delta = 0.0;
  double eps = 1e-4;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> iterations;  // default: planned N
  std::optional<double> h;                  // default: planned h
  double c_h = 1.0;
  std::optional<double> c0;                 // default: f(x0) - f*
  double x0_scale = 1.0;                    // x0 = x* + x0_scale * ones / sqrt(d)
  GradientPoint gradient_at = GradientPoint::x;
  unsigned threads = 1;
  Reduction reduction = Reduction::sequential;
  bool timing = true;
  std::string output;  // path prefix for <output>.trace.csv / <output>.summary.json; empty disables

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

/// Sets one flat key ("noise.kind", "eps", ...). Throws ConfigError for
/// unknown keys or unparsable values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Reads a flat key = value file. '#' starts a comment, values may be quoted,
/// and a [section] header prefixes the keys below it with "section.".
void load_config_file(RunConfig& cfg, const std::string& path);

nlohmann::json to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Plan& p);
nlohmann::json to_json(const AgdParams& p);
nlohmann::json to_json(const MomentReport& r);
nlohmann::json to_json(const KernelSpec& k);

struct RunSummary {
  RunConfig config;
  Plan plan;
  AgdParams params;
  double h = 0.0;
  double final_f_gap = 0.0;
  double final_dist = 0.0;
  double plateau = 0.0;
  std::uint64_t iterations = 0;
  std::uint64_t oracle_calls = 0;           // iterations * B
  std::uint64_t oracle_calls_physical = 0;  // function values actually requested
  std::optional<std::uint64_t> iterations_to_eps;
  bool success = false;
  bool diverged = false;
  std::string divergence_message;
  std::int64_t wall_ns = 0;
};

nlohmann::json to_json(const RunSummary& s);

struct RunResult {
  RunSummary summary;
  Trace trace;
};

/// Median of the last 10% of the f_gap column (at least one row).
double plateau(const Trace& trace);

/// First k with f_gap <= eps.
std::optional<std::uint64_t> first_hit(const Trace& trace, double eps);

/// The plan run_zoabsgd would use for cfg (problem lookup, x0, c0, batch default).
Plan plan_for(const RunConfig& cfg);

/// Plans, builds the oracle and estimator, and runs the accelerated loop.
/// Divergence is reported through summary.diverged with the partial trace kept.
/// Writes the trace CSV and summary JSON when cfg.output is set.
/// Throws ConfigError for invalid configurations.
RunResult run_zoabsgd(const RunConfig& cfg);

/// CSV text: '#' header lines (version, config, seed, params), then
/// k,f_gap,dist_to_opt,oracle_calls,wall_ns.
std::string format_trace_csv(const RunSummary& s, const Trace& trace);

struct SweepOptions {
  std::uint64_t seeds = 1;  // seeds base.seed, base.seed + 1, ...
  unsigned threads = 0;     // concurrent runs; 0 = hardware concurrency
  std::string output;       // CSV table, rows appended; empty disables
};

struct BatchRow {
  std::size_t B = 1;
  double plateau = 0.0;  // median over seeds
  std::uint64_t N = 0;
  std::uint64_t T = 0;
  double delta_max = 0.0;
};

std::vector<BatchRow> sweep_batch(const RunConfig& base, const std::vector<std::size_t>& batches,
                                  const SweepOptions& opts = {});

struct NoiseRow {
  double delta = 0.0;
  double success_rate = 0.0;
  double plateau = 0.0;  // median over seeds
  std::uint64_t runs = 0;
};

struct NoiseSweep {
  std::vector<NoiseRow> rows;
  double delta_max = 0.0;            // planned, for reference
  std::optional<double> threshold;   // first delta whose success rate falls below success_fraction
};

NoiseSweep sweep_noise(const RunConfig& base, const std::vector<double>& deltas, const SweepOptions& opts = {},
                       double success_fraction = 0.5);

struct RateOptions {
  std::string pattern = "quadratic-d2-cond{}";  // "{}" replaced by each value
  std::vector<double> values{10, 100, 1000};
  bool sqrt_axis = true;          // regress on sqrt(value) instead of value
  double iteration_factor = 4.0;  // runs last factor * planned N unless base.iterations is set
};

struct RatePoint {
  double value = 0.0;
  double x = 0.0;
  std::string problem;
  double iterations_to_eps = 0.0;  // median over seeds; NaN when fewer than half hit eps
  std::uint64_t planned_N = 0;
  std::size_t batch = 1;
  double T = 0.0;  // iterations_to_eps * batch
  std::uint64_t hits = 0;
};

struct RateStudy {
  std::vector<RatePoint> points;
  double exponent = 0.0;  // least-squares slope of log iterations vs log x
};

RateStudy rate_study(const RunConfig& base, const RateOptions& rate, const SweepOptions& opts = {});

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace zoabsgd
