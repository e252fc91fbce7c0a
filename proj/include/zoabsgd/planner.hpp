#pragma once

#include <cstdint>
#include <string_view>

#include "zoabsgd/kernel.hpp"

namespace zoabsgd {

enum class Regime {
  B_eq_1,
  B_lt_4dk,
  B_eq_4dk,
  B_gt_4dk,
};

std::string_view to_string(Regime r);

struct Plan {
  Regime regime = Regime::B_eq_1;
  double h = 0.0;
  std::uint64_t N = 1;
  std::uint64_t T = 1;           // N B estimator evaluations
  std::uint64_t T_physical = 2;  // 2 N B function values
  double delta_max = 0.0;
  std::size_t batch = 1;
  double rho_tilde = 1.0;
  // constants used
  double kappa = 0.0;
  double kappa_beta = 0.0;
  std::size_t rho = 0;  // round(4 d kappa), also the regime threshold
  // inputs
  double beta = 2.0;
  int dim = 1;
  double mu = 1.0;
  double L = 1.0;
  double eps = 1e-4;
  double c_h = 1.0;
  double c0 = 1.0;
};

/// round(4 d kappa) for the kernel of order beta.
std::size_t batch_threshold(double beta, int d);

/// Parameters for accuracy eps at batch size B. c0 estimates the initial gap
/// f(x0) - f*. Throws ParameterError for eps <= 0, B == 0, d < 1, mu <= 0,
/// L < mu, beta < 2, c_h <= 0 or c0 <= 0.
Plan plan(double beta, int d, double mu, double L, double eps, std::size_t B, double c_h = 1.0, double c0 = 1.0);

/// Smallest planned batch whose delta_max covers `delta`: the threshold when
/// delta fits there, otherwise max(threshold + 1, ceil(kappa d^2 delta^2 / (eps sqrt(mu))^(beta/(beta-1)))).
/// Throws ParameterError for delta <= 0 and the plan() preconditions.
std::size_t batch_for_noise(double beta, int d, double mu, double eps, double delta);

}  // namespace zoabsgd
