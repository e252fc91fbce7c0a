#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "zoabsgd/problems.hpp"
#include "zoabsgd/sampling.hpp"

namespace zoabsgd {

enum class NoiseKind {
  none,
  uniform,           // Uniform[-sqrt(3) delta, sqrt(3) delta], E[xi^2] = delta^2
  gaussian_clipped,  // delta * clamp(N(0, 1), -3, 3), E[xi^2] < delta^2
  constant,          // xi = delta on every call (non-zero mean)
};

std::string_view to_string(NoiseKind kind);
/// Throws ConfigError for unknown names.
NoiseKind parse_noise_kind(std::string_view name);

struct NoiseModel {
  NoiseKind kind = NoiseKind::uniform;
  double delta = 0.0;

  /// Throws ParameterError for negative or non-finite delta.
  void validate() const;
  double draw(RandomStream& s) const;
};

/// Noisy function value f(x) + xi for a single draw; throws EvaluationError
/// when f(x) is not finite.
double zo_eval(const Problem& p, const NoiseModel& n, const Vector& x, RandomStream& s);

/// Zero-order oracle with a call counter. Stateless apart from the counter,
/// which is atomic so batch elements may be evaluated concurrently.
class ZeroOrderOracle {
 public:
  ZeroOrderOracle(ProblemPtr problem, NoiseModel noise);

  double operator()(const Vector& x, RandomStream& s) const;

  const Problem& problem() const noexcept { return *problem_; }
  const ProblemPtr& problem_ptr() const noexcept { return problem_; }
  const NoiseModel& noise() const noexcept { return noise_; }
  std::uint64_t calls() const noexcept { return calls_.load(std::memory_order_relaxed); }
  void reset_calls() noexcept { calls_.store(0, std::memory_order_relaxed); }

 private:
  ProblemPtr problem_;
  NoiseModel noise_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

/// Synthetic first-order oracle g(x) = grad f(x) + b(x) + zeta with zero-mean
/// Gaussian zeta of second moment (rho - 1) |grad f(x)|^2 + sigma2. The unbiased
/// part grad f + zeta then satisfies E|.|^2 = rho |grad f|^2 + sigma2 exactly.
struct BiasedGradOracleSpec {
  ProblemPtr problem;
  std::function<Vector(const Vector&)> bias_fn;  // empty means b(x) = 0
  double delta_bias = 0.0;                       // sup |b(x)|
  double noise_sigma2 = 0.0;
  double rho = 1.0;

  void validate() const;

  /// Constants (rho', sigma2') for which E|g|^2 <= rho' |grad f|^2 + sigma2'
  /// holds including the bias: rho' = rho + 1 and sigma2' = sigma2 + 2 delta^2
  /// when delta > 0, otherwise (rho, sigma2).
  std::pair<double, double> growth_constants() const;
};

/// Constant bias delta * direction / |direction|.
std::function<Vector(const Vector&)> constant_bias(const Vector& direction, double delta);

/// One draw of the biased first-order oracle. Throws ParameterError when
/// |b(x)| exceeds delta_bias.
Vector biased_grad(const BiasedGradOracleSpec& o, const Vector& x, RandomStream& s);

/// Mean of `batch` draws; element i of iteration k uses element_stream(seed, k, batch, i).
Vector batched_biased_grad(const BiasedGradOracleSpec& o, const Vector& x, std::uint64_t seed,
                           std::uint64_t iteration, std::size_t batch);

}  // namespace zoabsgd
