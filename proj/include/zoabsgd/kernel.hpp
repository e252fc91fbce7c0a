#pragma once

#include <vector>

namespace zoabsgd {

/// Polynomial smoothing kernel K on [-1, 1] for a smoothness order beta.
///
/// K is the unique polynomial of degree l (the largest integer strictly below
/// beta) with E[u^j K(u)] = delta_{j,1} for j = 0..l, where u ~ Uniform[-1, 1].
/// It is assembled from Legendre polynomials orthonormal on [-1, 1]:
///
///     K(u) = 2 * sum_{m=0..l} p_m'(0) p_m(u).
///
/// Only odd monomials survive since p_m'(0) = 0 for even m.
struct KernelSpec {
  double beta = 2.0;
  int degree = 1;               // l
  std::vector<double> coeffs;   // monomial coefficients, coeffs[a] multiplies u^a
  double kappa = 0.0;           // integral of K(u)^2 over [-1, 1]
  double kappa_beta = 0.0;      // integral of |u|^beta |K(u)| over [-1, 1]
};

/// Largest integer strictly less than beta.
int smoothness_degree(double beta);

/// Throws ParameterError when beta < 2.
KernelSpec build_kernel(double beta);

/// Horner evaluation; throws DomainError when |u| > 1.
double eval_kernel(const KernelSpec& k, double u);

/// E[u^j K(u)] for u ~ Uniform[-1, 1], exact from the coefficients.
double kernel_moment(const KernelSpec& k, int j);

namespace detail {

/// Adaptive Simpson quadrature on [a, b] with absolute tolerance `tol`.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 50);

}  // namespace detail
}  // namespace zoabsgd

#include "zoabsgd/detail/simpson.hpp"
