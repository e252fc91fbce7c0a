#pragma once

#include <cstdint>

#include "zoabsgd/kernel.hpp"
#include "zoabsgd/oracle.hpp"

namespace zoabsgd {

/// How the B per-element estimates of one batch are summed.
enum class Reduction {
  sequential,  // element order; bit-identical for any thread count
  parallel,    // per-worker partial sums, combined in worker order
};

struct EstimatorConfig {
  double h = 0.1;
  std::size_t batch = 1;
  KernelSpec kernel = build_kernel(2.0);
  Reduction reduction = Reduction::sequential;
  unsigned threads = 1;  // workers used to evaluate batch elements

  /// Throws ParameterError for h <= 0 or batch == 0.
  void validate() const;
};

/// Two-point kernel estimate
///     g = d (f~(x + h r e) - f~(x - h r e)) / (2h) K(r) e
/// The two noise draws come from the `noise_plus` / `noise_minus` lanes of `s`.
Vector kernel_grad(const ZeroOrderOracle& oracle, const EstimatorConfig& c, const Vector& x, const Vector& e,
                   double r, const RandomStream& s);

/// One batch element: e and r from the `direction` / `radius` lanes of
/// `element`, then kernel_grad on the same stream.
Vector element_grad(const ZeroOrderOracle& oracle, const EstimatorConfig& c, const Vector& x,
                    const RandomStream& element);

/// Mean of c.batch element estimates at x; element i uses
/// element_stream(seed, iteration, c.batch, i). Performs exactly 2B oracle calls.
Vector batched_grad(const ZeroOrderOracle& oracle, const EstimatorConfig& c, const Vector& x,
                    std::uint64_t seed, std::uint64_t iteration);

/// Monte-Carlo certification of the estimator's bias and second moment at x.
struct MomentReport {
  /// |E[g] - grad f(x)| estimated by conditioning on e: the r-expectation is
  /// integrated by Gauss-Legendre quadrature and the linear term
  /// d r K(r) <grad f, e> e (mean exactly grad f) is subtracted as a control
  /// variate. Same target as raw_bias_norm, far smaller variance.
  double bias_norm = 0.0;
  double bias_stderr = 0.0;
  /// Brute-force |mean(g) - grad f(x)| over the raw samples.
  double raw_bias_norm = 0.0;
  double raw_bias_stderr = 0.0;
  double second_moment = 0.0;  // mean |g|^2
  double second_moment_stderr = 0.0;
  double bound_bias = 0.0;     // kappa_beta L_beta h^(beta - 1)
  double bound_second = 0.0;   // 4 d kappa |grad f|^2 + 4 d kappa L^2 h^2 + kappa d^2 Delta^2 / h^2
  double grad_norm = 0.0;
  std::uint64_t n_samples = 0;
};

/// Throws ParameterError when n_samples < 10^4, UnsupportedError when the
/// problem has no analytic gradient. Deterministic in (seed, n_samples) for any
/// thread count.
MomentReport certify_moments(const ZeroOrderOracle& oracle, const EstimatorConfig& c, const Vector& x,
                             std::uint64_t n_samples, std::uint64_t seed, unsigned threads = 0);

}  // namespace zoabsgd
