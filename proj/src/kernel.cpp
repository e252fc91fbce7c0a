#include "zoabsgd/kernel.hpp"

#include <cmath>
#include <sstream>

#include "zoabsgd/errors.hpp"

namespace zoabsgd {

namespace {

constexpr double kKappaBetaTolerance = 1e-10;

double horner(const std::vector<double>& c, double u) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
  return acc;
}

// Monomial coefficients of the classical Legendre polynomials L_0..L_n via
// (m + 1) L_{m+1} = (2m + 1) u L_m - m L_{m-1}.
std::vector<std::vector<double>> legendre_monomials(int n) {
  std::vector<std::vector<double>> p(static_cast<std::size_t>(n) + 1);
  p[0] = {1.0};
  if (n >= 1) p[1] = {0.0, 1.0};
  for (int m = 1; m < n; ++m) {
    std::vector<double> next(static_cast<std::size_t>(m) + 2, 0.0);
    for (std::size_t a = 0; a < p[m].size(); ++a) next[a + 1] += (2.0 * m + 1.0) * p[m][a];
    for (std::size_t a = 0; a < p[m - 1].size(); ++a) next[a] -= m * p[m - 1][a];
    for (double& c : next) c /= (m + 1.0);
    p[m + 1] = std::move(next);
  }
  return p;
}

// Integral of u^n over [-1, 1].
double monomial_integral(int n) { return (n % 2 == 0) ? 2.0 / (n + 1.0) : 0.0; }

// Sign changes of K on (0, 1), refined by bisection.
std::vector<double> positive_roots(const std::vector<double>& c) {
  constexpr int kGrid = 4096;
  std::vector<double> roots;
  double prev_u = 1e-12;
  double prev = horner(c, prev_u);
  for (int i = 1; i <= kGrid; ++i) {
    const double u = static_cast<double>(i) / kGrid;
    const double v = horner(c, u);
    if ((prev < 0.0 && v > 0.0) || (prev > 0.0 && v < 0.0)) {
      double lo = prev_u, hi = u, flo = prev;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = horner(c, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_u = u;
    prev = v;
  }
  return roots;
}

}  // namespace

int smoothness_degree(double beta) {
  const double fl = std::floor(beta);
  return fl == beta ? static_cast<int>(fl) - 1 : static_cast<int>(std::ceil(beta)) - 1;
}

KernelSpec build_kernel(double beta) {
  if (!(beta >= 2.0) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "invalid smoothness order beta=" << beta << " (need beta >= 2)";
    throw ParameterError(msg.str());
  }
  KernelSpec k;
  k.beta = beta;
  k.degree = smoothness_degree(beta);
  k.coeffs.assign(static_cast<std::size_t>(k.degree) + 1, 0.0);

  // 2 p_m'(0) p_m(u) = (2m + 1) L_m'(0) L_m(u) for p_m = sqrt((2m+1)/2) L_m.
  const auto legendre = legendre_monomials(k.degree);
  for (int m = 1; m <= k.degree; m += 2) {
    const double slope_at_zero = legendre[m][1];
    for (std::size_t a = 0; a < legendre[m].size(); ++a) {
      k.coeffs[a] += (2.0 * m + 1.0) * slope_at_zero * legendre[m][a];
    }
  }

  for (std::size_t a = 0; a < k.coeffs.size(); ++a) {
    for (std::size_t b = 0; b < k.coeffs.size(); ++b) {
      k.kappa += k.coeffs[a] * k.coeffs[b] * monomial_integral(static_cast<int>(a + b));
    }
  }

  // |u|^beta |K(u)| is even; integrate over [0, 1] split at the roots of K.
  std::vector<double> breaks{0.0};
  for (double r : positive_roots(k.coeffs)) breaks.push_back(r);
  breaks.push_back(1.0);
  const auto integrand = [&](double u) { return std::pow(u, beta) * std::abs(horner(k.coeffs, u)); };
  const double piece_tol = 0.5 * kKappaBetaTolerance / static_cast<double>(breaks.size() - 1);
  double half = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    half += detail::adaptive_simpson(integrand, breaks[i], breaks[i + 1], piece_tol);
  }
  k.kappa_beta = 2.0 * half;
  return k;
}

double eval_kernel(const KernelSpec& k, double u) {
  if (!(std::abs(u) <= 1.0)) {
    std::ostringstream msg;
    msg << "kernel argument u=" << u << " outside [-1, 1]";
    throw DomainError(msg.str());
  }
  return horner(k.coeffs, u);
}

double kernel_moment(const KernelSpec& k, int j) {
  if (j < 0) throw ParameterError("kernel moment order must be non-negative");
  double m = 0.0;
  for (std::size_t a = 0; a < k.coeffs.size(); ++a) {
    m += k.coeffs[a] * monomial_integral(static_cast<int>(a) + j);
  }
  return 0.5 * m;
}

}  // namespace zoabsgd
