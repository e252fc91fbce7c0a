#include "zoabsgd/agd.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace zoabsgd {

namespace {

AgdParams finish_params(AgdParams p, std::optional<double> eta_override) {
  const double eta_max = 1.0 / (2.0 * p.rho_tilde * p.L);
  if (eta_override) {
    if (!(*eta_override > 0.0)) throw ParameterError("eta override must be positive");
    p.eta = std::min(*eta_override, eta_max);
  } else {
    p.eta = eta_max;
  }
  p.gamma = 1.0 / std::sqrt(2.0 * p.mu * p.eta * p.rho_tilde);
  p.beta = 1.0 - std::sqrt(p.mu * p.eta / (2.0 * p.rho_tilde));
  p.a0 = 1.0;
  p.log_b0 = 0.5 * std::log(2.0 * p.mu);
  return p;
}

void check_constants(double mu, double L) {
  if (!(mu > 0.0)) throw ParameterError("mu must be positive");
  if (!(L >= mu) || !std::isfinite(L)) throw ParameterError("L must be finite and at least mu");
}

bool finite(const Vector& v) { return v.allFinite(); }

}  // namespace

double AgdParams::b0() const { return std::exp(log_b0); }

double AgdParams::contraction() const { return 1.0 - std::sqrt(mu / (rho_tilde * rho_tilde * L)); }

AgdParams make_params(double mu, double L, double rho, std::size_t B, std::optional<double> eta_override) {
  check_constants(mu, L);
  if (!(rho >= 0.0)) throw ParameterError("rho must be non-negative");
  if (B == 0) throw ParameterError("batch size must be at least 1");
  AgdParams p;
  p.mu = mu;
  p.L = L;
  p.rho = rho;
  p.B = B;
  p.rho_tilde = std::max(1.0, rho / static_cast<double>(B));
  return finish_params(p, eta_override);
}

AgdParams make_unbatched_params(double mu, double L, double rho, std::optional<double> eta_override) {
  check_constants(mu, L);
  if (!(rho > 0.0)) throw ParameterError("rho must be positive");
  AgdParams p;
  p.mu = mu;
  p.L = L;
  p.rho = rho;
  p.B = 1;
  p.rho_tilde = rho;
  return finish_params(p, eta_override);
}

double alpha_k(const AgdParams& p, double a_k, double b_k1) {
  const double num = p.gamma * p.beta * b_k1 * b_k1 * p.eta;
  return num / (num + 2.0 * a_k * a_k);
}

double alpha_k_log(const AgdParams& p, double log_a_k, double log_b_k1) {
  const double t = 2.0 * log_a_k - 2.0 * log_b_k1 - std::log(p.gamma * p.beta * p.eta);
  return 1.0 / (1.0 + 2.0 * std::exp(t));
}

AgdState initial_state(const AgdParams& p, const Vector& x0) {
  AgdState s;
  s.x = x0;
  s.y = x0;
  s.z = x0;
  s.log_a = std::log(p.a0);
  s.log_b = p.log_b0;
  return s;
}

Vector extrapolate(const AgdState& s, const AgdParams& p) {
  const double log_b1 = s.log_b - 0.5 * std::log(p.beta);
  const double alpha = alpha_k_log(p, s.log_a, log_b1);
  return alpha * s.z + (1.0 - alpha) * s.x;
}

AgdState agd_step(const AgdState& s, const AgdParams& p, const Vector& g) {
  if (!finite(g)) {
    std::ostringstream msg;
    msg << "non-finite gradient estimate at iteration " << s.k;
    throw DivergenceError(msg.str(), s.k, {});
  }
  AgdState n;
  n.k = s.k + 1;
  n.y = extrapolate(s, p);
  n.x = n.y - p.eta * g;
  n.z = p.beta * s.z + (1.0 - p.beta) * n.y - (p.gamma * p.eta) * g;
  n.log_b = s.log_b - 0.5 * std::log(p.beta);
  n.log_a = std::log(p.gamma * std::sqrt(p.eta * p.rho_tilde)) + n.log_b;
  return n;
}

AgdResult run_agd(const Problem& problem, const GradientOracle& oracle, const AgdParams& p, std::uint64_t N,
                  const Vector& x0, const AgdOptions& opts) {
  if (N == 0) throw ParameterError("iteration count must be at least 1");
  if (x0.size() != problem.dim()) throw ParameterError("starting point has the wrong dimension");

  const Vector& x_star = problem.x_star();
  const double start_dist = (x0 - x_star).norm();
  const double guard = opts.guard_factor * (start_dist > 0.0 ? start_dist : problem.radius());
  const auto t0 = std::chrono::steady_clock::now();

  AgdResult res;
  res.state = initial_state(p, x0);
  if (opts.record_trace) res.trace.reserve(N + 1);

  auto record = [&](const AgdState& s) {
    if (!opts.record_trace) return;
    TraceRow row;
    row.k = s.k;
    row.f_gap = problem.value(s.x) - problem.f_star();
    row.dist_to_opt = (s.x - x_star).norm();
    row.oracle_calls = opts.oracle_calls ? opts.oracle_calls() : 0;
    if (opts.timing) {
      row.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
    }
    res.trace.push_back(row);
  };
  auto fail = [&](const std::string& why, std::uint64_t k) {
    std::ostringstream msg;
    msg << "divergence at iteration " << k << ": " << why;
    throw DivergenceError(msg.str(), k, std::move(res.trace));
  };

  record(res.state);
  for (std::uint64_t k = 0; k < N; ++k) {
    const AgdState& s = res.state;
    Vector g;
    try {
      g = oracle(opts.gradient_at == GradientPoint::x ? s.x : extrapolate(s, p), k);
    } catch (const EvaluationError& e) {
      fail(e.what(), k);
    }
    if (!finite(g)) fail("non-finite gradient estimate", k);
    res.state = agd_step(s, p, g);
    const AgdState& n = res.state;
    if (!finite(n.x) || !finite(n.y) || !finite(n.z)) fail("non-finite iterate", n.k);
    const double worst = std::max({(n.x - x_star).norm(), (n.y - x_star).norm(), (n.z - x_star).norm()});
    if (worst > guard) fail("iterate left the safety ball", n.k);
    record(n);
  }
  return res;
}

}  // namespace zoabsgd
