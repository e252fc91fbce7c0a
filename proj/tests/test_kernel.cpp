#include <doctest.h>

#include <cmath>
#include <functional>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zoabsgd/errors.hpp"
#include "zoabsgd/kernel.hpp"

using namespace zoabsgd;

namespace {

// Odd-monomial coefficients solving E[u^j K(u)] = delta_{j1} for odd j <= l
// directly from the moment system, u ~ Uniform[-1, 1].
Eigen::VectorXd moment_system_coeffs(int l) {
  const int m = (l + 1) / 2;
  Eigen::MatrixXd A(m, m);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      const int power = (2 * i + 1) + (2 * k + 1);
      A(i, k) = 1.0 / (power + 1.0);  // E[u^power] for even power
    }
  }
  rhs[0] = 1.0;
  return A.fullPivLu().solve(rhs);
}

double quad(const std::function<double(double)>& f) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -1.0, 1.0, 30, 1e-13);
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("smoothness degree is the largest integer strictly below beta") {
  CHECK(smoothness_degree(2.0) == 1);
  CHECK(smoothness_degree(2.5) == 2);
  CHECK(smoothness_degree(3.0) == 2);
  CHECK(smoothness_degree(4.0) == 3);
  CHECK(smoothness_degree(6.7) == 6);
}

TEST_CASE("beta = 2 gives K(u) = 3u, kappa = 6, kappa_beta = 3/2") {
  const KernelSpec k = build_kernel(2.0);
  CHECK(k.degree == 1);
  CHECK(eval_kernel(k, 0.5) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(k.kappa == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(k.kappa_beta == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("beta = 3 shares the degree-1 kernel with kappa_beta = 6/5") {
  const KernelSpec k = build_kernel(3.0);
  CHECK(k.degree == 2);
  CHECK(eval_kernel(k, -0.25) == doctest::Approx(-0.75).epsilon(1e-14));
  CHECK(k.kappa_beta == doctest::Approx(1.2).epsilon(1e-9));
}

TEST_CASE("coefficients agree with the moment system") {
  for (double beta : {2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 2.5, 4.5}) {
    CAPTURE(beta);
    const KernelSpec k = build_kernel(beta);
    const Eigen::VectorXd c = moment_system_coeffs(k.degree);
    for (int i = 0; i < c.size(); ++i) {
      CHECK(k.coeffs[2 * i + 1] == doctest::Approx(c[i]).epsilon(1e-10));
    }
    for (std::size_t a = 0; a < k.coeffs.size(); a += 2) CHECK(k.coeffs[a] == 0.0);
  }
}

TEST_CASE("moments, kappa and kappa_beta against quadrature") {
  for (double beta : {2.0, 3.0, 4.0, 5.0, 6.0}) {
    CAPTURE(beta);
    const KernelSpec k = build_kernel(beta);
    for (int j = 0; j <= k.degree; ++j) {
      CHECK(std::abs(kernel_moment(k, j) - (j == 1 ? 1.0 : 0.0)) <= 1e-10);
      const double m = 0.5 * quad([&](double u) { return std::pow(u, j) * eval_kernel(k, u); });
      CHECK(m == doctest::Approx(kernel_moment(k, j)).epsilon(1e-10).scale(1.0));
    }
    CHECK(quad([&](double u) { return std::pow(eval_kernel(k, u), 2); }) == doctest::Approx(k.kappa).epsilon(1e-10));
    const double kb = quad([&](double u) { return std::pow(std::abs(u), beta) * std::abs(eval_kernel(k, u)); });
    CHECK(kb == doctest::Approx(k.kappa_beta).epsilon(1e-6));
    CHECK(k.kappa <= 3.0 * beta * beta * beta);
    CHECK(k.kappa_beta <= 2.0 * std::sqrt(2.0) * (beta - 1.0));
  }
}

TEST_CASE("beta = 4 and 6 closed forms") {
  const KernelSpec k4 = build_kernel(4.0);
  CHECK(k4.coeffs[1] == doctest::Approx(18.75));
  CHECK(k4.coeffs[3] == doctest::Approx(-26.25));
  CHECK(k4.kappa == doctest::Approx(37.5));
  const KernelSpec k6 = build_kernel(6.0);
  CHECK(k6.coeffs[5] == doctest::Approx(162.421875));
  CHECK(k6.kappa == doctest::Approx(114.84375));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(build_kernel(1.5), ParameterError);
  CHECK_THROWS_AS(build_kernel(std::nan("")), ParameterError);
  const KernelSpec k = build_kernel(2.0);
  CHECK_THROWS_AS(eval_kernel(k, 1.0001), DomainError);
  CHECK_NOTHROW(eval_kernel(k, -1.0));
}

TEST_CASE("adaptive Simpson") {
  CHECK(detail::adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-11));
  CHECK(detail::adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-8));
}

}
