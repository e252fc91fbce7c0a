#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zoabsgd/bench.hpp"

using namespace zoabsgd;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

RunConfig quiet(const std::string& problem = "quadratic-d2-cond10") {
  RunConfig c;
  c.problem = problem;
  c.timing = false;
  return c;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("config file with sections, comments and quotes") {
  const std::string path = "bench_test.conf";
  {
    std::ofstream out(path);
    out << "# run settings\nproblem = \"quartic-mix-d3\"\nbeta = 4\neps = 1e-3  # target\nbatch = 600\n"
        << "[noise]\nkind = gaussian-clipped\ndelta = 0.002\n";
  }
  RunConfig c;
  load_config_file(c, path);
  CHECK(c.problem == "quartic-mix-d3");
  CHECK(c.beta == 4.0);
  CHECK(c.eps == 1e-3);
  CHECK(c.batch == std::optional<std::size_t>(600));
  CHECK(c.noise_kind == NoiseKind::gaussian_clipped);
  CHECK(c.delta == 0.002);
  // flags applied afterwards win
  apply_setting(c, "noise.delta", "0.5");
  apply_setting(c, "batch", "auto");
  CHECK(c.delta == 0.5);
  CHECK_FALSE(c.batch.has_value());
  std::filesystem::remove(path);
}

TEST_CASE("config errors") {
  RunConfig c;
  CHECK_THROWS_AS(apply_setting(c, "colour", "red"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "eps", "tiny"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "batch", "-3"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "timing", "maybe"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "noise.kind", "pink"), ConfigError);
  CHECK_THROWS_AS(load_config_file(c, "does/not/exist.conf"), ConfigError);
  c.eps = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_THROWS_AS(run_zoabsgd(c), ConfigError);
  RunConfig u = quiet("no-such-problem");
  CHECK_THROWS_AS(run_zoabsgd(u), ConfigError);
}

TEST_CASE("RunConfig JSON round trip") {
  RunConfig c = quiet("quartic-mix-d4");
  c.beta = 3.5;
  c.batch = 17;
  c.noise_kind = NoiseKind::constant;
  c.delta = 0.125;
  c.seed = 123456789012345ULL;
  c.h = 0.03;
  c.c0 = 2.5;
  c.gradient_at = GradientPoint::y;
  c.reduction = Reduction::parallel;
  c.output = "out/x";
  const RunConfig r = run_config_from_json(to_json(c));
  CHECK(to_json(r) == to_json(c));
  CHECK(r.seed == c.seed);
}

TEST_CASE("plateau and first hit") {
  Trace t;
  for (std::uint64_t k = 0; k < 20; ++k) t.push_back(TraceRow{k, 100.0 - double(k), 0, 0, 0});
  CHECK(plateau(t) == doctest::Approx(81.5));  // median of {82, 81}
  CHECK(first_hit(t, 90.0) == std::optional<std::uint64_t>(10));
  CHECK_FALSE(first_hit(t, 1.0).has_value());
  CHECK(std::isnan(plateau(Trace{})));
}

TEST_CASE("single run: summary invariants and outputs") {
  RunConfig c = quiet();
  c.seed = 9;
  c.output = "bench_test_run/a";
  const RunResult r = run_zoabsgd(c);
  const RunSummary& s = r.summary;
  CHECK_FALSE(s.diverged);
  CHECK(s.success);
  CHECK(s.final_f_gap <= 1e-4);
  CHECK(s.plan.regime == Regime::B_eq_4dk);
  CHECK(s.iterations == s.plan.N);
  CHECK(s.oracle_calls_physical == 2 * s.iterations * 48);
  CHECK(s.oracle_calls == s.iterations * 48);
  CHECK(r.trace.size() == s.iterations + 1);
  const std::string csv = slurp("bench_test_run/a.trace.csv");
  CHECK(csv.find("# zoabsgd " + std::string(version())) == 0);
  CHECK(csv.find("# seed: 9\n") != std::string::npos);
  CHECK(csv.find("# config: ") != std::string::npos);
  CHECK(csv.find("# params: ") != std::string::npos);
  CHECK(csv.find("\nk,f_gap,dist_to_opt,oracle_calls,wall_ns\n") != std::string::npos);
  const auto j = nlohmann::json::parse(slurp("bench_test_run/a.summary.json"));
  CHECK(j.at("seed") == 9);
  CHECK(j.at("config").at("problem") == "quadratic-d2-cond10");
  CHECK(j.at("oracle_calls_physical") == s.oracle_calls_physical);
  std::filesystem::remove_all("bench_test_run");
}

TEST_CASE("divergence keeps the partial trace") {
  RunConfig c = quiet();
  c.delta = 1e8;
  c.iterations = 200;
  const RunResult r = run_zoabsgd(c);
  CHECK(r.summary.diverged);
  CHECK_FALSE(r.summary.success);
  CHECK(!r.trace.empty());
  CHECK(r.summary.iterations < 200);
  // the failing step's evaluations are counted too
  CHECK(r.summary.oracle_calls_physical == 2 * 48 * (r.summary.iterations + 1));
}

TEST_CASE("B = 1 needs at least twice the iterations of B = 4dk") {
  RunConfig c = quiet();
  c.iterations = 5000;
  const RunResult full = run_zoabsgd(c);
  c.batch = 1;
  const RunResult one = run_zoabsgd(c);
  REQUIRE(full.summary.iterations_to_eps.has_value());
  REQUIRE(one.summary.iterations_to_eps.has_value());
  CHECK(double(*one.summary.iterations_to_eps) >= 2.0 * double(*full.summary.iterations_to_eps));
}

TEST_CASE("noise sweep: delta = 0 always succeeds, table is append-safe") {
  const std::string table = "bench_test_noise.csv";
  std::filesystem::remove(table);
  SweepOptions so;
  so.seeds = 4;
  so.output = table;
  const RunConfig c = quiet();
  const NoiseSweep s = sweep_noise(c, {0.0, 1.0}, so);
  CHECK(s.rows[0].success_rate == 1.0);
  CHECK(s.rows[1].success_rate == 0.0);
  CHECK(s.threshold == std::optional<double>(1.0));
  sweep_noise(c, {0.0, 1.0}, so);
  const std::string text = slurp(table);
  CHECK(count(text, "delta,success_rate,plateau\n") == 1);
  CHECK(count(text, "\n0,1,") == 2);
  CHECK_THROWS_AS(sweep_noise(c, {1.0, 0.5}, so), ConfigError);
  std::filesystem::remove(table);
}

TEST_CASE("batch sweep below the threshold keeps the plateau level") {
  RunConfig c = quiet();
  c.delta = plan_for(c).delta_max;
  c.iterations = 3000;
  SweepOptions so;
  so.seeds = 3;
  const auto rows = sweep_batch(c, {1, 12, 48}, so);
  REQUIRE(rows.size() == 3);
  // With a fixed iteration budget every run sits at its floor; the floor is set
  // by delta_max, which is the same in all three sub-threshold regimes.
  for (const BatchRow& r : rows) CAPTURE(r.plateau);
  const double lo = std::min({rows[0].plateau, rows[1].plateau, rows[2].plateau});
  const double hi = std::max({rows[0].plateau, rows[1].plateau, rows[2].plateau});
  CHECK(hi <= 3.0 * lo);
  CHECK(rows[0].T == rows[0].N);
}

TEST_CASE("batch sweep above the threshold lowers the plateau") {
  RunConfig c = quiet();
  c.delta = 10 * plan_for(c).delta_max;
  c.iterations = 300;
  SweepOptions so;
  so.seeds = 3;
  const auto rows = sweep_batch(c, {48, 192, 768}, so);
  CHECK(rows[1].plateau <= rows[0].plateau);
  CHECK(rows[2].plateau <= rows[1].plateau);
}

TEST_CASE("rate study: smaller eps needs more iterations") {
  RunConfig c = quiet();
  SweepOptions so;
  so.seeds = 2;
  RateOptions ro;
  ro.values = {10, 100};
  const RateStudy coarse = rate_study(c, ro, so);
  c.eps = 1e-5;
  const RateStudy fine = rate_study(c, ro, so);
  for (std::size_t i = 0; i < 2; ++i) CHECK(fine.points[i].iterations_to_eps > coarse.points[i].iterations_to_eps);
  CHECK(coarse.exponent > 0.0);
  ro.pattern = "quadratic-d2-cond10";
  CHECK_THROWS_AS(rate_study(c, ro, so), ConfigError);
}

TEST_CASE("loglog slope") {
  CHECK(loglog_slope({1, 2, 4}, {3, 12, 48}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(loglog_slope({1}, {1}), ParameterError);
  CHECK_THROWS_AS(loglog_slope({2, 2}, {1, 3}), ParameterError);
}

}
