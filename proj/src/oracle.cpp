#include "zoabsgd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zoabsgd {

std::string_view to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::none: return "none";
    case NoiseKind::uniform: return "uniform";
    case NoiseKind::gaussian_clipped: return "gaussian-clipped";
    case NoiseKind::constant: return "constant";
  }
  return "unknown";
}

NoiseKind parse_noise_kind(std::string_view name) {
  if (name == "none") return NoiseKind::none;
  if (name == "uniform") return NoiseKind::uniform;
  if (name == "gaussian-clipped") return NoiseKind::gaussian_clipped;
  if (name == "constant") return NoiseKind::constant;
  throw ConfigError("unknown noise kind '" + std::string(name) + "'");
}

void NoiseModel::validate() const {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    std::ostringstream msg;
    msg << "noise level must be finite and non-negative, got " << delta;
    throw ParameterError(msg.str());
  }
}

double NoiseModel::draw(RandomStream& s) const {
  switch (kind) {
    case NoiseKind::none: return 0.0;
    case NoiseKind::uniform: return delta == 0.0 ? 0.0 : s.uniform(-std::sqrt(3.0) * delta, std::sqrt(3.0) * delta);
    case NoiseKind::gaussian_clipped: return delta == 0.0 ? 0.0 : delta * std::clamp(s.normal(), -3.0, 3.0);
    case NoiseKind::constant: return delta;
  }
  return 0.0;
}

double zo_eval(const Problem& p, const NoiseModel& n, const Vector& x, RandomStream& s) {
  const double f = p.value(x);
  if (!std::isfinite(f)) throw EvaluationError("objective returned a non-finite value", x);
  return f + n.draw(s);
}

ZeroOrderOracle::ZeroOrderOracle(ProblemPtr problem, NoiseModel noise)
    : problem_(std::move(problem)), noise_(noise) {
  if (!problem_) throw ParameterError("oracle needs a problem");
  noise_.validate();
}

double ZeroOrderOracle::operator()(const Vector& x, RandomStream& s) const {
  calls_.fetch_add(1, std::memory_order_relaxed);
  return zo_eval(*problem_, noise_, x, s);
}

void BiasedGradOracleSpec::validate() const {
  if (!problem) throw ParameterError("biased oracle needs a problem");
  if (!(delta_bias >= 0.0)) throw ParameterError("delta_bias must be non-negative");
  if (!(noise_sigma2 >= 0.0)) throw ParameterError("noise_sigma2 must be non-negative");
  if (!(rho >= 1.0)) throw ParameterError("rho must be at least 1 for the synthetic oracle");
}

std::pair<double, double> BiasedGradOracleSpec::growth_constants() const {
  if (delta_bias == 0.0) return {rho, noise_sigma2};
  return {rho + 1.0, noise_sigma2 + 2.0 * delta_bias * delta_bias};
}

std::function<Vector(const Vector&)> constant_bias(const Vector& direction, double delta) {
  const double norm = direction.norm();
  if (!(norm > 0.0)) throw ParameterError("bias direction must be non-zero");
  Vector b = direction * (delta / norm);
  return [b](const Vector&) { return b; };
}

Vector biased_grad(const BiasedGradOracleSpec& o, const Vector& x, RandomStream& s) {
  const Vector grad = o.problem->gradient(x);
  Vector g = grad;
  if (o.bias_fn) {
    const Vector b = o.bias_fn(x);
    if (b.norm() > o.delta_bias * (1.0 + 1e-12) + 1e-300) {
      throw ParameterError("bias function exceeds its declared bound delta_bias");
    }
    g += b;
  }
  const double zeta2 = (o.rho - 1.0) * grad.squaredNorm() + o.noise_sigma2;
  if (zeta2 > 0.0) {
    const int d = static_cast<int>(x.size());
    const double scale = std::sqrt(zeta2 / d);
    RandomStream zs = s.substream(Lane::gradient_noise);
    for (int i = 0; i < d; ++i) g[i] += scale * zs.normal();
  }
  return g;
}

Vector batched_biased_grad(const BiasedGradOracleSpec& o, const Vector& x, std::uint64_t seed,
                           std::uint64_t iteration, std::size_t batch) {
  if (batch == 0) throw ParameterError("batch size must be at least 1");
  Vector sum = Vector::Zero(x.size());
  for (std::size_t i = 0; i < batch; ++i) {
    RandomStream s = element_stream(seed, iteration, batch, i);
    sum += biased_grad(o, x, s);
  }
  return sum / static_cast<double>(batch);
}

}  // namespace zoabsgd
