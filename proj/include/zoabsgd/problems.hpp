#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zoabsgd/errors.hpp"

namespace zoabsgd {

/// Strongly convex test objective with known constants and minimizer.
///
/// The constants mu, L and the Hoelder constants are certified on the working
/// ball { x : |x - x_star| <= radius }.
class Problem {
 public:
  virtual ~Problem() = default;

  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return static_cast<int>(x_star_.size()); }
  double mu() const noexcept { return mu_; }
  double L() const noexcept { return L_; }
  /// Highest smoothness order with a finite Hoelder constant; infinity for C^inf.
  double beta_native() const noexcept { return beta_native_; }
  const Vector& x_star() const noexcept { return x_star_; }
  double f_star() const noexcept { return f_star_; }
  double radius() const noexcept { return radius_; }

  virtual double value(const Vector& x) const = 0;
  virtual Vector gradient(const Vector& x) const = 0;
  virtual bool has_analytic_gradient() const noexcept { return true; }

  /// Degree-`order` Taylor polynomial of f around x, evaluated at z.
  virtual double taylor(const Vector& x, const Vector& z, int order) const = 0;

  /// Constant L_beta such that |f(z) - Taylor_l(x; z)| <= L_beta |z - x|^beta
  /// for x, z in the working ball, with l the largest integer below beta.
  virtual double holder_constant(double beta) const = 0;

 protected:
  Problem(std::string name, Vector x_star, double mu, double L, double beta_native, double radius)
      : name_(std::move(name)),
        x_star_(std::move(x_star)),
        mu_(mu),
        L_(L),
        beta_native_(beta_native),
        radius_(radius) {}

  void set_f_star(double f) noexcept { f_star_ = f; }

 private:
  std::string name_;
  Vector x_star_;
  double mu_;
  double L_;
  double beta_native_;
  double radius_;
  double f_star_ = 0.0;
};

using ProblemPtr = std::shared_ptr<const Problem>;

/// f(x) = 1/2 (x - x*)^T diag(spectrum) (x - x*).
ProblemPtr make_quadratic(const std::vector<double>& spectrum, const Vector& x_star,
                          double radius = 10.0, std::string name = "quadratic");

/// f(x) = mu/2 |x - x*|^2 + c4 sum_i (x_i - x*_i)^4, L = mu + 12 c4 R^2 on the ball of radius R.
ProblemPtr make_quartic_mix(const Vector& x_star, double mu, double c4, double radius,
                            std::string name = "quartic-mix");

/// f(x) = mu/2 |x - x*|^2 + c sum_i log cosh(x_i - x*_i); C^inf and not polynomial,
/// L = mu + c globally.
ProblemPtr make_logcosh_mix(const Vector& x_star, double mu, double c, double radius,
                            std::string name = "logcosh-mix");

/// Default minimizer used by the registry: alternating +-0.5 entries.
Vector default_minimizer(int d);

/// Registry lookup by name:
///   quadratic-d<k>-cond<c>   spectrum geometric from 1 to c, radius 10
///   quartic-mix-d<k>         mu = 1, c4 = 1, radius 1
///   logcosh-mix-d<k>         mu = 1, c = 1, radius 2
/// Each problem passes certify_problem before being returned; throws
/// ConfigError for unknown names and Error when self-certification fails.
ProblemPtr make_problem(std::string_view name);

struct ProblemCertificate {
  bool strong_convexity = true;
  bool smoothness = true;
  bool gradient = true;
  bool holder = true;
  double worst_gradient_error = 0.0;  // relative
  std::string detail;

  bool ok() const noexcept { return strong_convexity && smoothness && gradient && holder; }
};

/// Randomized check of the problem's declared constants at `points` ball points
/// (and as many pairs), for the Hoelder orders in `betas`.
ProblemCertificate certify_problem(const Problem& p, const std::vector<double>& betas,
                                   std::uint64_t seed = 0x5eed, int points = 100);

}  // namespace zoabsgd
