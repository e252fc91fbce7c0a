#include "zoabsgd/estimator.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "zoabsgd/detail/parallel.hpp"

namespace zoabsgd {

namespace {

constexpr std::uint64_t kMinCertificationSamples = 10000;
constexpr std::uint64_t kCertificationChunk = 4096;
constexpr unsigned kRadiusNodes = 20;

// Running mean / sum of squared deviations, combinable across chunks.
struct ScalarStats {
  double n = 0.0, mean = 0.0, m2 = 0.0;
  void add(double v) {
    n += 1.0;
    const double delta = v - mean;
    mean += delta / n;
    m2 += delta * (v - mean);
  }
  void merge(const ScalarStats& o) {
    if (o.n == 0.0) return;
    const double total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * o.n / total;
    m2 += o.m2 + delta * delta * n * o.n / total;
    n = total;
  }
  double variance() const { return n > 1.0 ? m2 / (n - 1.0) : 0.0; }
};

struct VectorStats {
  double n = 0.0;
  Vector mean, m2;
  explicit VectorStats(int d) : mean(Vector::Zero(d)), m2(Vector::Zero(d)) {}
  void add(const Vector& v) {
    n += 1.0;
    const Vector delta = v - mean;
    mean += delta / n;
    m2 += delta.cwiseProduct(v - mean);
  }
  void merge(const VectorStats& o) {
    if (o.n == 0.0) return;
    const double total = n + o.n;
    const Vector delta = o.mean - mean;
    mean += delta * (o.n / total);
    m2 += o.m2 + delta.cwiseProduct(delta) * (n * o.n / total);
    n = total;
  }
  // Norm of the vector of standard errors of the mean.
  double stderr_norm() const { return n > 1.0 ? std::sqrt(m2.sum() / (n - 1.0) / n) : 0.0; }
};

struct ChunkStats {
  VectorStats raw, refined;
  ScalarStats second;
  explicit ChunkStats(int d) : raw(d), refined(d) {}
  void merge(const ChunkStats& o) {
    raw.merge(o.raw);
    refined.merge(o.refined);
    second.merge(o.second);
  }
};

}  // namespace

void EstimatorConfig::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) {
    std::ostringstream msg;
    msg << "smoothing parameter h must be positive, got " << h;
    throw ParameterError(msg.str());
  }
  if (batch == 0) throw ParameterError("batch size must be at least 1");
}

Vector kernel_grad(const ZeroOrderOracle& oracle, const EstimatorConfig& c, const Vector& x, const Vector& e,
                   double r, const RandomStream& s) {
  if (!(c.h > 0.0)) throw ParameterError("smoothing parameter h must be positive (division by 2h)");
  const int d = static_cast<int>(x.size());
  const double k = eval_kernel(c.kernel, r);
  RandomStream plus = s.substream(Lane::noise_plus);
  RandomStream minus = s.substream(Lane::noise_minus);
  const Vector step = (c.h * r) * e;
  const double f_plus = oracle(x + step, plus);
  const double f_minus = oracle(x - step, minus);
  return (d * (f_plus - f_minus) / (2.0 * c.h) * k) * e;
}

Vector element_grad(const ZeroOrderOracle& oracle, const EstimatorConfig& c, const Vector& x,
                    const RandomStream& element) {
  RandomStream ds = element.substream(Lane::direction);
  RandomStream rs = element.substream(Lane::radius);
  const Vector e = sample_sphere(static_cast<int>(x.size()), ds);
  const double r = sample_radius(rs);
  return kernel_grad(oracle, c, x, e, r, element);
}

Vector batched_grad(const ZeroOrderOracle& oracle, const EstimatorConfig& c, const Vector& x,
                    std::uint64_t seed, std::uint64_t iteration) {
  c.validate();
  const std::size_t b = c.batch;
  const auto element = [&](std::size_t i) {
    return element_grad(oracle, c, x, element_stream(seed, iteration, b, i));
  };

  if (c.threads <= 1) {
    Vector sum = Vector::Zero(x.size());
    for (std::size_t i = 0; i < b; ++i) sum += element(i);
    return sum / static_cast<double>(b);
  }

  if (c.reduction == Reduction::sequential) {
    std::vector<Vector> parts(b);
    detail::parallel_for(b, c.threads, [&](std::size_t i) { parts[i] = element(i); });
    Vector sum = Vector::Zero(x.size());
    for (const Vector& p : parts) sum += p;
    return sum / static_cast<double>(b);
  }

  const std::size_t workers = std::min<std::size_t>(c.threads, b);
  std::vector<Vector> partial(workers, Vector::Zero(x.size()));
  detail::parallel_for(workers, static_cast<unsigned>(workers), [&](std::size_t w) {
    const std::size_t lo = w * b / workers, hi = (w + 1) * b / workers;
    for (std::size_t i = lo; i < hi; ++i) partial[w] += element(i);
  });
  Vector sum = Vector::Zero(x.size());
  for (const Vector& p : partial) sum += p;
  return sum / static_cast<double>(b);
}

MomentReport certify_moments(const ZeroOrderOracle& oracle, const EstimatorConfig& c, const Vector& x,
                             std::uint64_t n_samples, std::uint64_t seed, unsigned threads) {
  c.validate();
  const Problem& p = oracle.problem();
  if (!p.has_analytic_gradient()) {
    throw UnsupportedError("moment certification needs the problem's analytic gradient");
  }
  if (n_samples < kMinCertificationSamples) {
    throw ParameterError("moment certification needs at least 10^4 samples");
  }

  const int d = static_cast<int>(x.size());
  const Vector grad = p.gradient(x);
  using Gauss = boost::math::quadrature::gauss<double, kRadiusNodes>;
  const auto& nodes = Gauss::abscissa();
  const auto& weights = Gauss::weights();

  // Conditional mean over r of the residual after the control variate, for a
  // fixed direction e. The integrand is even in r, so E_r[.] = sum_j w_j phi(r_j)
  // over the non-negative Gauss nodes (weights of the symmetric rule on [-1, 1]).
  const auto refined_sample = [&](const Vector& e, Vector& buf_plus, Vector& buf_minus) {
    double acc = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const double r = nodes[j];
      const double w = (r == 0.0) ? 0.5 * weights[j] : weights[j];
      buf_plus.noalias() = x + (c.h * r) * e;
      buf_minus.noalias() = x - (c.h * r) * e;
      acc += w * (p.value(buf_plus) - p.value(buf_minus)) / (2.0 * c.h) * eval_kernel(c.kernel, r);
    }
    return Vector((d * (acc - grad.dot(e))) * e);
  };

  const std::uint64_t n_chunks = (n_samples + kCertificationChunk - 1) / kCertificationChunk;
  std::vector<ChunkStats> chunks(n_chunks, ChunkStats(d));
  detail::parallel_for(n_chunks, threads, [&](std::size_t ci) {
    ChunkStats& st = chunks[ci];
    Vector buf_plus(d), buf_minus(d);
    const std::uint64_t lo = ci * kCertificationChunk;
    const std::uint64_t hi = std::min<std::uint64_t>(n_samples, lo + kCertificationChunk);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const RandomStream element(seed, i);
      RandomStream ds = element.substream(Lane::direction);
      RandomStream rs = element.substream(Lane::radius);
      const Vector e = sample_sphere(d, ds);
      const double r = sample_radius(rs);
      const Vector g = kernel_grad(oracle, c, x, e, r, element);
      st.raw.add(g);
      st.second.add(g.squaredNorm());
      st.refined.add(refined_sample(e, buf_plus, buf_minus));
    }
  });
  ChunkStats total(d);
  for (const ChunkStats& st : chunks) total.merge(st);

  MomentReport rep;
  rep.n_samples = n_samples;
  rep.grad_norm = grad.norm();
  rep.bias_norm = total.refined.mean.norm();
  rep.bias_stderr = total.refined.stderr_norm();
  rep.raw_bias_norm = (total.raw.mean - grad).norm();
  rep.raw_bias_stderr = total.raw.stderr_norm();
  rep.second_moment = total.second.mean;
  rep.second_moment_stderr = std::sqrt(total.second.variance() / total.second.n);

  const double kappa = c.kernel.kappa;
  const double beta = c.kernel.beta;
  const double h = c.h;
  const double L = p.L();
  const double delta = oracle.noise().kind == NoiseKind::none ? 0.0 : oracle.noise().delta;
  rep.bound_bias = c.kernel.kappa_beta * p.holder_constant(beta) * std::pow(h, beta - 1.0);
  rep.bound_second = 4.0 * d * kappa * grad.squaredNorm() + 4.0 * d * kappa * L * L * h * h +
                     kappa * d * d * delta * delta / (h * h);
  return rep;
}

}  // namespace zoabsgd
