#include "zoabsgd/bench.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>

#include "zoabsgd/detail/parallel.hpp"

#ifndef ZOABSGD_VERSION
#define ZOABSGD_VERSION "0.1.0"
#endif

namespace zoabsgd {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string unquote(std::string s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  const std::string v = trim(text);
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw ConfigError("invalid value '" + v + "' for " + std::string(key));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string v = trim(text);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("invalid boolean '" + v + "' for " + std::string(key));
}

bool is_unset(std::string_view text) {
  const std::string v = trim(text);
  return v.empty() || v == "auto" || v == "none" || v == "null";
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string file_header(const RunConfig& cfg) {
  std::ostringstream out;
  out << "# zoabsgd " << version() << '\n';
  out << "# seed: " << cfg.seed << '\n';
  out << "# config: " << to_json(cfg).dump() << '\n';
  return out.str();
}

void ensure_parent(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
}

void write_all(int fd, const std::string& s, const std::string& path) {
  std::size_t done = 0;
  while (done < s.size()) {
    const ssize_t n = ::write(fd, s.data() + done, s.size() - done);
    if (n < 0) throw Error("write failed: " + path);
    done += static_cast<std::size_t>(n);
  }
}

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

// Appends rows to a CSV table; the header is written only when the file is
// empty. Each row is one write(2) on an O_APPEND descriptor.
void append_table(const std::string& path, const std::string& header, const std::vector<std::string>& rows) {
  if (path.empty()) return;
  std::lock_guard lock(table_mutex());
  ensure_parent(path);
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw Error("cannot open " + path);
  struct stat st {};
  try {
    if (::fstat(fd, &st) == 0 && st.st_size == 0) write_all(fd, header, path);
    for (const std::string& r : rows) write_all(fd, r, path);
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);
}

void write_file(const std::string& path, const std::string& text) {
  ensure_parent(path);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

Vector start_point(const Problem& p, double scale) {
  const int d = p.dim();
  return p.x_star() + Vector::Constant(d, scale / std::sqrt(static_cast<double>(d)));
}

std::string substitute(const std::string& pattern, double value) {
  const auto pos = pattern.find("{}");
  if (pos == std::string::npos) throw ConfigError("rate-study pattern needs a '{}' placeholder");
  std::ostringstream v;
  v << value;
  return pattern.substr(0, pos) + v.str() + pattern.substr(pos + 2);
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string_view version() { return ZOABSGD_VERSION; }

void RunConfig::validate() const {
  if (problem.empty()) throw ConfigError("problem name is empty");
  if (!(beta >= 2.0) || !std::isfinite(beta)) throw ConfigError("beta must be at least 2");
  if (batch && *batch == 0) throw ConfigError("batch must be at least 1");
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw ConfigError("noise.delta must be finite and non-negative");
  if (!(eps > 0.0)) throw ConfigError("eps must be positive");
  if (iterations && *iterations == 0) throw ConfigError("iterations must be at least 1");
  if (h && !(*h > 0.0)) throw ConfigError("h must be positive");
  if (!(c_h > 0.0)) throw ConfigError("c_h must be positive");
  if (c0 && !(*c0 > 0.0)) throw ConfigError("c0 must be positive");
  if (!std::isfinite(x0_scale)) throw ConfigError("x0_scale must be finite");
}

void apply_setting(RunConfig& cfg, std::string_view raw_key, std::string_view raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = unquote(trim(raw_value));
  if (key == "problem") cfg.problem = value;
  else if (key == "beta") cfg.beta = parse_number<double>(key, value);
  else if (key == "batch") cfg.batch = is_unset(value) ? std::nullopt : std::optional(parse_number<std::size_t>(key, value));
  else if (key == "noise.kind") cfg.noise_kind = parse_noise_kind(value);
  else if (key == "noise.delta" || key == "delta") cfg.delta = parse_number<double>(key, value);
  else if (key == "eps") cfg.eps = parse_number<double>(key, value);
  else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
  else if (key == "iterations") cfg.iterations = is_unset(value) ? std::nullopt : std::optional(parse_number<std::uint64_t>(key, value));
  else if (key == "h") cfg.h = is_unset(value) ? std::nullopt : std::optional(parse_number<double>(key, value));
  else if (key == "c_h") cfg.c_h = parse_number<double>(key, value);
  else if (key == "c0") cfg.c0 = is_unset(value) ? std::nullopt : std::optional(parse_number<double>(key, value));
  else if (key == "x0_scale") cfg.x0_scale = parse_number<double>(key, value);
  else if (key == "gradient_at") {
    if (value == "x") cfg.gradient_at = GradientPoint::x;
    else if (value == "y") cfg.gradient_at = GradientPoint::y;
    else throw ConfigError("gradient_at must be x or y");
  } else if (key == "threads") cfg.threads = parse_number<unsigned>(key, value);
  else if (key == "reduction") {
    if (value == "sequential") cfg.reduction = Reduction::sequential;
    else if (value == "parallel") cfg.reduction = Reduction::parallel;
    else throw ConfigError("reduction must be sequential or parallel");
  } else if (key == "timing") cfg.timing = parse_bool(key, value);
  else if (key == "output") cfg.output = value;
  else throw ConfigError("unknown config key '" + key + "'");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') throw ConfigError(path + ":" + std::to_string(lineno) + ": bad section header");
      section = trim(body.substr(1, body.size() - 2));
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(body.substr(0, eq));
    apply_setting(cfg, section.empty() ? key : section + "." + key, body.substr(eq + 1));
  }
}

json to_json(const RunConfig& c) {
  return json{
      {"problem", c.problem},
      {"beta", c.beta},
      {"batch", optional_json(c.batch)},
      {"noise", {{"kind", std::string(to_string(c.noise_kind))}, {"delta", c.delta}}},
      {"eps", c.eps},
      {"seed", c.seed},
      {"iterations", optional_json(c.iterations)},
      {"h", optional_json(c.h)},
      {"c_h", c.c_h},
      {"c0", optional_json(c.c0)},
      {"x0_scale", c.x0_scale},
      {"gradient_at", c.gradient_at == GradientPoint::x ? "x" : "y"},
      {"threads", c.threads},
      {"reduction", c.reduction == Reduction::sequential ? "sequential" : "parallel"},
      {"timing", c.timing},
      {"output", c.output},
  };
}

RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "noise") {
        if (value.contains("kind")) c.noise_kind = parse_noise_kind(value.at("kind").get<std::string>());
        if (value.contains("delta")) c.delta = value.at("delta").get<double>();
        continue;
      }
      if (value.is_null()) {
        apply_setting(c, key, "auto");
      } else if (value.is_string()) {
        apply_setting(c, key, value.get<std::string>());
      } else if (value.is_boolean()) {
        apply_setting(c, key, value.get<bool>() ? "true" : "false");
      } else if (value.is_number_float()) {
        apply_setting(c, key, fmt(value.get<double>()));
      } else {
        apply_setting(c, key, value.dump());
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad run config JSON: ") + e.what());
  }
  return c;
}

json to_json(const Plan& p) {
  return json{
      {"regime", std::string(to_string(p.regime))},
      {"h", p.h},
      {"N", p.N},
      {"T", p.T},
      {"T_physical", p.T_physical},
      {"delta_max", p.delta_max},
      {"batch", p.batch},
      {"rho_tilde", p.rho_tilde},
      {"constants_used", {{"kappa", p.kappa}, {"kappa_beta", p.kappa_beta}, {"rho", p.rho}}},
      {"inputs", {{"beta", p.beta}, {"dim", p.dim}, {"mu", p.mu}, {"L", p.L}, {"eps", p.eps}, {"c_h", p.c_h}, {"c0", p.c0}}},
  };
}

json to_json(const AgdParams& p) {
  return json{{"mu", p.mu},       {"L", p.L},         {"rho", p.rho},   {"B", p.B},
              {"rho_tilde", p.rho_tilde}, {"eta", p.eta}, {"gamma", p.gamma}, {"beta_k", p.beta},
              {"a0", p.a0},       {"b0", p.b0()}};
}

json to_json(const MomentReport& r) {
  return json{
      {"bias_norm", r.bias_norm},
      {"bias_stderr", r.bias_stderr},
      {"raw_bias_norm", r.raw_bias_norm},
      {"raw_bias_stderr", r.raw_bias_stderr},
      {"second_moment", r.second_moment},
      {"second_moment_stderr", r.second_moment_stderr},
      {"bound_bias", r.bound_bias},
      {"bound_second", r.bound_second},
      {"grad_norm", r.grad_norm},
      {"n_samples", r.n_samples},
  };
}

json to_json(const KernelSpec& k) {
  json moments = json::array();
  for (int j = 0; j <= k.degree; ++j) moments.push_back(kernel_moment(k, j));
  return json{{"beta", k.beta},   {"degree", k.degree},         {"coeffs", k.coeffs},
              {"kappa", k.kappa}, {"kappa_beta", k.kappa_beta}, {"moments", moments}};
}

json to_json(const RunSummary& s) {
  return json{
      {"version", std::string(version())},
      {"seed", s.config.seed},
      {"config", to_json(s.config)},
      {"plan", to_json(s.plan)},
      {"params", to_json(s.params)},
      {"h", s.h},
      {"final_f_gap", s.final_f_gap},
      {"final_dist", s.final_dist},
      {"plateau", s.plateau},
      {"iterations", s.iterations},
      {"iterations_to_eps", optional_json(s.iterations_to_eps)},
      {"oracle_calls", s.oracle_calls},
      {"oracle_calls_physical", s.oracle_calls_physical},
      {"success", s.success},
      {"diverged", s.diverged},
      {"divergence_message", s.divergence_message},
      {"wall_ns", s.wall_ns},
  };
}

double plateau(const Trace& trace) {
  if (trace.empty()) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t n = std::max<std::size_t>(1, (trace.size() + 9) / 10);
  std::vector<double> tail;
  tail.reserve(n);
  for (std::size_t i = trace.size() - n; i < trace.size(); ++i) tail.push_back(trace[i].f_gap);
  return median(std::move(tail));
}

std::optional<std::uint64_t> first_hit(const Trace& trace, double eps) {
  for (const TraceRow& r : trace) {
    if (r.f_gap <= eps) return r.k;
  }
  return std::nullopt;
}

Plan plan_for(const RunConfig& cfg) {
  cfg.validate();
  const ProblemPtr p = make_problem(cfg.problem);
  const Vector x0 = start_point(*p, cfg.x0_scale);
  const double c0 = cfg.c0.value_or(std::max(p->value(x0) - p->f_star(), cfg.eps));
  const std::size_t B = cfg.batch.value_or(batch_threshold(cfg.beta, p->dim()));
  return plan(cfg.beta, p->dim(), p->mu(), p->L(), cfg.eps, B, cfg.c_h, c0);
}

RunResult run_zoabsgd(const RunConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const ProblemPtr problem = make_problem(cfg.problem);
  const int d = problem->dim();
  const Vector x0 = start_point(*problem, cfg.x0_scale);
  const double gap0 = problem->value(x0) - problem->f_star();
  const double c0 = cfg.c0.value_or(std::max(gap0, cfg.eps));

  RunResult res;
  RunSummary& s = res.summary;
  s.config = cfg;
  const std::size_t B = cfg.batch.value_or(batch_threshold(cfg.beta, d));
  s.plan = plan(cfg.beta, d, problem->mu(), problem->L(), cfg.eps, B, cfg.c_h, c0);
  s.params = make_params(problem->mu(), problem->L(), static_cast<double>(s.plan.rho), B);
  s.h = cfg.h.value_or(s.plan.h);
  const std::uint64_t N = cfg.iterations.value_or(s.plan.N);

  EstimatorConfig ec;
  ec.h = s.h;
  ec.batch = B;
  ec.kernel = build_kernel(cfg.beta);
  ec.reduction = cfg.reduction;
  ec.threads = cfg.threads;
  ec.validate();

  ZeroOrderOracle oracle(problem, NoiseModel{cfg.noise_kind, cfg.delta});
  const GradientOracle grad = [&](const Vector& point, std::uint64_t k) {
    return batched_grad(oracle, ec, point, cfg.seed, k);
  };
  AgdOptions opts;
  opts.gradient_at = cfg.gradient_at;
  opts.oracle_calls = [&] { return oracle.calls(); };
  opts.timing = cfg.timing;

  try {
    AgdResult r = run_agd(*problem, grad, s.params, N, x0, opts);
    res.trace = std::move(r.trace);
    s.iterations = r.state.k;
  } catch (const DivergenceError& e) {
    res.trace = e.trace();
    s.diverged = true;
    s.divergence_message = e.what();
    s.iterations = res.trace.empty() ? 0 : res.trace.back().k;
  }

  s.oracle_calls = s.iterations * B;
  s.oracle_calls_physical = oracle.calls();
  if (!res.trace.empty()) {
    s.final_f_gap = res.trace.back().f_gap;
    s.final_dist = res.trace.back().dist_to_opt;
  }
  s.plateau = plateau(res.trace);
  s.iterations_to_eps = first_hit(res.trace, cfg.eps);
  s.success = !s.diverged && s.final_f_gap <= cfg.eps;
  s.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();

  if (!cfg.output.empty()) {
    write_file(cfg.output + ".trace.csv", format_trace_csv(s, res.trace));
    write_file(cfg.output + ".summary.json", to_json(s).dump(2) + "\n");
  }
  return res;
}

std::string format_trace_csv(const RunSummary& s, const Trace& trace) {
  std::ostringstream out;
  out << file_header(s.config);
  out << "# params: " << to_json(s.params).dump() << '\n';
  out << "# plan: " << to_json(s.plan).dump() << '\n';
  out << "# h: " << fmt(s.h) << '\n';
  out << "k,f_gap,dist_to_opt,oracle_calls,wall_ns\n";
  for (const TraceRow& r : trace) {
    out << r.k << ',' << fmt(r.f_gap) << ',' << fmt(r.dist_to_opt) << ',' << r.oracle_calls << ',' << r.wall_ns
        << '\n';
  }
  return out.str();
}

namespace {

// Runs every (config index, seed) pair concurrently; runs[i][j] holds seed j of config i.
std::vector<std::vector<RunSummary>> run_grid(const std::vector<RunConfig>& cfgs, const SweepOptions& opts) {
  if (opts.seeds == 0) throw ConfigError("seeds must be at least 1");
  std::vector<std::vector<RunSummary>> out(cfgs.size(), std::vector<RunSummary>(opts.seeds));
  detail::parallel_for(cfgs.size() * opts.seeds, opts.threads, [&](std::size_t idx) {
    const std::size_t i = idx / opts.seeds, j = idx % opts.seeds;
    RunConfig c = cfgs[i];
    c.seed = cfgs[i].seed + j;
    c.output.clear();
    c.threads = 1;
    RunResult r = run_zoabsgd(c);
    r.summary.plateau = r.summary.diverged ? std::numeric_limits<double>::infinity() : r.summary.plateau;
    out[i][j] = std::move(r.summary);
  });
  return out;
}

std::string sweep_header(const RunConfig& base, const SweepOptions& opts, const std::string& columns) {
  return file_header(base) + "# seeds: " + std::to_string(opts.seeds) + "\n" + columns + "\n";
}

}  // namespace

std::vector<BatchRow> sweep_batch(const RunConfig& base, const std::vector<std::size_t>& batches,
                                  const SweepOptions& opts) {
  base.validate();
  std::vector<RunConfig> cfgs;
  for (std::size_t B : batches) {
    if (B == 0) throw ConfigError("batch sizes must be at least 1");
    RunConfig c = base;
    c.batch = B;
    cfgs.push_back(c);
  }
  const auto runs = run_grid(cfgs, opts);
  std::vector<BatchRow> rows;
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    std::vector<double> plateaus;
    for (const RunSummary& s : runs[i]) plateaus.push_back(s.plateau);
    BatchRow row;
    row.B = batches[i];
    row.plateau = median(plateaus);
    row.N = runs[i][0].iterations;
    row.T = row.N * row.B;
    row.delta_max = runs[i][0].plan.delta_max;
    rows.push_back(row);
    lines.push_back(std::to_string(row.B) + "," + fmt(row.plateau) + "," + std::to_string(row.N) + "," +
                    std::to_string(row.T) + "\n");
  }
  append_table(opts.output, sweep_header(base, opts, "B,plateau,N,T"), lines);
  return rows;
}

NoiseSweep sweep_noise(const RunConfig& base, const std::vector<double>& deltas, const SweepOptions& opts,
                       double success_fraction) {
  base.validate();
  std::vector<RunConfig> cfgs;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] >= 0.0)) throw ConfigError("noise levels must be non-negative");
    if (i > 0 && deltas[i] < deltas[i - 1]) throw ConfigError("noise levels must be ascending");
    RunConfig c = base;
    c.delta = deltas[i];
    cfgs.push_back(c);
  }
  const auto runs = run_grid(cfgs, opts);
  NoiseSweep sweep;
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    std::vector<double> plateaus;
    std::uint64_t ok = 0;
    for (const RunSummary& s : runs[i]) {
      plateaus.push_back(s.plateau);
      ok += s.success ? 1 : 0;
    }
    NoiseRow row;
    row.delta = deltas[i];
    row.runs = runs[i].size();
    row.success_rate = static_cast<double>(ok) / static_cast<double>(row.runs);
    row.plateau = median(plateaus);
    sweep.delta_max = runs[i][0].plan.delta_max;
    if (!sweep.threshold && row.success_rate < success_fraction) sweep.threshold = row.delta;
    sweep.rows.push_back(row);
    lines.push_back(fmt(row.delta) + "," + fmt(row.success_rate) + "," + fmt(row.plateau) + "\n");
  }
  append_table(opts.output, sweep_header(base, opts, "delta,success_rate,plateau"), lines);
  return sweep;
}

RateStudy rate_study(const RunConfig& base, const RateOptions& rate, const SweepOptions& opts) {
  if (rate.values.size() < 2) throw ConfigError("rate study needs at least two values");
  if (!(rate.iteration_factor >= 1.0)) throw ConfigError("iteration_factor must be at least 1");
  std::vector<RunConfig> cfgs;
  std::vector<RatePoint> points;
  for (double v : rate.values) {
    RunConfig c = base;
    c.problem = substitute(rate.pattern, v);
    if (!c.iterations) {
      const Plan pl = plan_for(c);
      c.iterations = static_cast<std::uint64_t>(std::ceil(rate.iteration_factor * static_cast<double>(pl.N)));
    }
    c.validate();
    RatePoint pt;
    pt.value = v;
    pt.x = rate.sqrt_axis ? std::sqrt(v) : v;
    pt.problem = c.problem;
    points.push_back(pt);
    cfgs.push_back(c);
  }
  const auto runs = run_grid(cfgs, opts);
  RateStudy study;
  std::vector<std::string> lines;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    RatePoint& pt = points[i];
    std::vector<double> hits;
    for (const RunSummary& s : runs[i]) {
      hits.push_back(s.iterations_to_eps ? static_cast<double>(*s.iterations_to_eps)
                                         : std::numeric_limits<double>::infinity());
      pt.hits += s.iterations_to_eps ? 1 : 0;
    }
    pt.iterations_to_eps = 2 * pt.hits > hits.size() ? median(hits) : std::numeric_limits<double>::quiet_NaN();
    pt.planned_N = runs[i][0].plan.N;
    pt.batch = runs[i][0].plan.batch;
    pt.T = pt.iterations_to_eps * static_cast<double>(pt.batch);
    xs.push_back(pt.x);
    ys.push_back(pt.iterations_to_eps);
    lines.push_back(fmt(pt.value) + "," + fmt(pt.x) + "," + pt.problem + "," + fmt(pt.iterations_to_eps) + "," +
                    std::to_string(pt.planned_N) + "," + std::to_string(pt.batch) + "," + fmt(pt.T) + "\n");
  }
  study.points = std::move(points);
  study.exponent = loglog_slope(xs, ys);
  append_table(opts.output,
               sweep_header(base, opts, "value,x,problem,iterations_to_eps,planned_N,B,T"), lines);
  return study;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ParameterError("slope fit needs two or more paired points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (!(std::abs(den) > 0.0)) throw ParameterError("slope fit needs distinct x values");
  return (n * sxy - sx * sy) / den;
}

}  // namespace zoabsgd
