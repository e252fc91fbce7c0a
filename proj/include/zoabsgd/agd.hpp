#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zoabsgd/problems.hpp"

namespace zoabsgd {

/// Constant-gamma schedule of the accelerated method with a batched, biased
/// gradient oracle satisfying E|g|^2 <= rho |grad f|^2 + sigma^2.
struct AgdParams {
  double mu = 1.0;
  double L = 1.0;
  double rho = 1.0;
  std::size_t B = 1;
  double rho_tilde = 1.0;  // max(1, rho / B)
  double eta = 0.5;
  double gamma = 1.0;
  double beta = 0.5;       // 1 - sqrt(mu eta / (2 rho_tilde)), the same for every k
  double a0 = 1.0;
  double log_b0 = 0.0;     // log sqrt(2 mu)

  double b0() const;
  /// Per-step contraction factor 1 - sqrt(mu / (rho_tilde^2 L)) at the default eta.
  double contraction() const;
};

/// Throws ParameterError for mu <= 0, L < mu, rho < 0, B == 0, or eta_override <= 0.
AgdParams make_params(double mu, double L, double rho, std::size_t B,
                      std::optional<double> eta_override = std::nullopt);

/// Unbatched schedule, built directly from rho with no max(1, .) clamp.
/// Requires rho > 0.
AgdParams make_unbatched_params(double mu, double L, double rho,
                                std::optional<double> eta_override = std::nullopt);

/// alpha_k = gamma beta b_{k+1}^2 eta / (gamma beta b_{k+1}^2 eta + 2 a_k^2).
double alpha_k(const AgdParams& p, double a_k, double b_k1);
/// Same quantity from log a_k and log b_{k+1}; safe when a_k, b_{k+1} overflow.
double alpha_k_log(const AgdParams& p, double log_a_k, double log_b_k1);

struct TraceRow {
  std::uint64_t k = 0;
  double f_gap = 0.0;
  double dist_to_opt = 0.0;
  std::uint64_t oracle_calls = 0;
  std::int64_t wall_ns = 0;
};

using Trace = std::vector<TraceRow>;

struct AgdState {
  std::uint64_t k = 0;
  Vector x, y, z;
  double log_a = 0.0;
  double log_b = 0.0;
};

/// x = y = z = x0, a = a0, b = b0.
AgdState initial_state(const AgdParams& p, const Vector& x0);

/// y_k = alpha_k z_k + (1 - alpha_k) x_k for the current state.
Vector extrapolate(const AgdState& s, const AgdParams& p);

/// Raised when the gradient is non-finite, the objective fails, or an iterate
/// leaves the safety ball. Carries the trace recorded so far.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::uint64_t k, Trace trace)
      : Error(what), k_(k), trace_(std::move(trace)) {}
  std::uint64_t iteration() const noexcept { return k_; }
  const Trace& trace() const noexcept { return trace_; }

 private:
  std::uint64_t k_;
  Trace trace_;
};

/// One step:
///     y  = alpha z + (1 - alpha) x
///     x+ = y - eta g
///     z+ = beta z + (1 - beta) y - gamma eta g
/// followed by log b += -log(beta) / 2 and a = gamma sqrt(eta rho_tilde) b.
/// Throws DivergenceError (with an empty trace) for non-finite g.
AgdState agd_step(const AgdState& s, const AgdParams& p, const Vector& g);

enum class GradientPoint {
  x,  // gradient estimate taken at x_k
  y,  // gradient estimate taken at the extrapolated point y_k
};

/// Gradient estimate for iteration k at `point`.
using GradientOracle = std::function<Vector(const Vector& point, std::uint64_t k)>;

struct AgdOptions {
  GradientPoint gradient_at = GradientPoint::x;
  double guard_factor = 1e6;  // safety ball radius, in units of |x0 - x*|
  std::function<std::uint64_t()> oracle_calls;  // reported in the trace; 0 when empty
  bool record_trace = true;
  bool timing = true;  // false writes wall_ns = 0 so traces are byte-reproducible
};

struct AgdResult {
  AgdState state;
  Trace trace;
};

/// N steps from x0. The trace holds rows k = 0..N with the gap and distance of x_k.
/// Throws ParameterError for N == 0 and DivergenceError (carrying the partial
/// trace) on non-finite gradients, objective failures, or guard violations.
AgdResult run_agd(const Problem& problem, const GradientOracle& oracle, const AgdParams& p, std::uint64_t N,
                  const Vector& x0, const AgdOptions& opts = {});

}  // namespace zoabsgd
