#include "zoabsgd/planner.hpp"

#include <cmath>

#include "zoabsgd/errors.hpp"

namespace zoabsgd {

namespace {

void check_common(double beta, int d, double mu, double eps) {
  if (!(eps > 0.0)) throw ParameterError("eps must be positive");
  if (d < 1) throw ParameterError("dimension must be at least 1");
  if (!(mu > 0.0)) throw ParameterError("mu must be positive");
  if (!(beta >= 2.0)) throw ParameterError("beta must be at least 2");
}

double overbatch_delta_max(double beta, int d, double mu, double eps, double B) {
  return std::pow(eps * std::sqrt(mu), beta / (2.0 * (beta - 1.0))) * std::sqrt(B) / d;
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::B_eq_1: return "B_eq_1";
    case Regime::B_lt_4dk: return "B_lt_4dk";
    case Regime::B_eq_4dk: return "B_eq_4dk";
    case Regime::B_gt_4dk: return "B_gt_4dk";
  }
  return "unknown";
}

std::size_t batch_threshold(double beta, int d) {
  return static_cast<std::size_t>(std::llround(4.0 * d * build_kernel(beta).kappa));
}

Plan plan(double beta, int d, double mu, double L, double eps, std::size_t B, double c_h, double c0) {
  check_common(beta, d, mu, eps);
  if (B == 0) throw ParameterError("batch size must be at least 1");
  if (!(L >= mu) || !std::isfinite(L)) throw ParameterError("L must be finite and at least mu");
  if (!(c_h > 0.0)) throw ParameterError("c_h must be positive");
  if (!(c0 > 0.0)) throw ParameterError("initial gap estimate must be positive");

  const KernelSpec k = build_kernel(beta);
  Plan p;
  p.beta = beta;
  p.dim = d;
  p.mu = mu;
  p.L = L;
  p.eps = eps;
  p.c_h = c_h;
  p.c0 = c0;
  p.batch = B;
  p.kappa = k.kappa;
  p.kappa_beta = k.kappa_beta;
  p.rho = static_cast<std::size_t>(std::llround(4.0 * d * k.kappa));

  if (B == 1) p.regime = Regime::B_eq_1;
  else if (B < p.rho) p.regime = Regime::B_lt_4dk;
  else if (B == p.rho) p.regime = Regime::B_eq_4dk;
  else p.regime = Regime::B_gt_4dk;

  const double scale = eps * std::sqrt(mu);
  if (p.regime == Regime::B_gt_4dk) {
    p.h = c_h * std::pow(scale, 1.0 / (2.0 * (beta - 1.0)));
    p.delta_max = overbatch_delta_max(beta, d, mu, eps, static_cast<double>(B));
  } else {
    p.h = c_h * std::sqrt(scale);
    p.delta_max = scale / std::sqrt(static_cast<double>(d));
  }

  p.rho_tilde = std::max(1.0, static_cast<double>(p.rho) / static_cast<double>(B));
  const double iters = std::sqrt(p.rho_tilde * p.rho_tilde * L / mu) * std::log(c0 / eps);
  p.N = iters > 1.0 ? static_cast<std::uint64_t>(std::ceil(iters)) : 1;
  p.T = p.N * B;
  p.T_physical = 2 * p.T;
  return p;
}

std::size_t batch_for_noise(double beta, int d, double mu, double eps, double delta) {
  check_common(beta, d, mu, eps);
  if (!(delta > 0.0)) throw ParameterError("delta must be positive");
  const KernelSpec k = build_kernel(beta);
  const auto thr = static_cast<std::size_t>(std::llround(4.0 * d * k.kappa));
  const double scale = eps * std::sqrt(mu);
  if (delta <= scale / std::sqrt(static_cast<double>(d))) return thr;
  const double need = std::ceil(k.kappa * d * d * delta * delta / std::pow(scale, beta / (beta - 1.0)));
  if (!(need < 1e18)) throw ParameterError("required batch size overflows");
  return std::max(thr + 1, static_cast<std::size_t>(need));
}

}  // namespace zoabsgd
