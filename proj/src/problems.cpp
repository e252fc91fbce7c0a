#include "zoabsgd/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <regex>
#include <sstream>

#include "zoabsgd/kernel.hpp"
#include "zoabsgd/sampling.hpp"

namespace zoabsgd {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// f(x) = sum_i phi_i(x_i - x*_i). Mixed partial derivatives vanish, so every
// multi-index Taylor polynomial reduces to per-coordinate 1-D expansions.
class SeparableProblem : public Problem {
 public:
  using Problem::Problem;

  double value(const Vector& x) const override {
    double f = 0.0;
    for (int i = 0; i < dim(); ++i) f += phi(i, x[i] - x_star()[i], 0);
    return f;
  }

  Vector gradient(const Vector& x) const override {
    Vector g(dim());
    for (int i = 0; i < dim(); ++i) g[i] = phi(i, x[i] - x_star()[i], 1);
    return g;
  }

  double taylor(const Vector& x, const Vector& z, int order) const override {
    double acc = 0.0;
    for (int i = 0; i < dim(); ++i) {
      const double s = x[i] - x_star()[i];
      const double t = z[i] - x[i];
      double tn = 1.0;
      for (int n = 0; n <= order; ++n) {
        acc += phi(i, s, n) * tn / factorial(n);
        tn *= t;
      }
    }
    return acc;
  }

  // Lagrange remainder of order n = l + 1 per coordinate, then
  // sum_i |t_i|^n <= |t|^n <= (2R)^(n - beta) |t|^beta on the ball.
  double holder_constant(double beta) const override {
    const int n = smoothness_degree(beta) + 1;
    const double m = derivative_bound(n);
    if (m == 0.0) return 0.0;
    return m / factorial(n) * std::pow(2.0 * radius(), n - beta);
  }

 protected:
  // n-th derivative of the coordinate function phi_i at s.
  virtual double phi(int i, double s, int n) const = 0;
  // sup over i and |s| <= R of |phi_i^(n)(s)|.
  virtual double derivative_bound(int n) const = 0;

  void finish() { set_f_star(value(x_star())); }
};

class Quadratic final : public SeparableProblem {
 public:
  Quadratic(std::string name, const std::vector<double>& spectrum, const Vector& x_star, double radius)
      : SeparableProblem(std::move(name), x_star, *std::min_element(spectrum.begin(), spectrum.end()),
                         *std::max_element(spectrum.begin(), spectrum.end()),
                         std::numeric_limits<double>::infinity(), radius),
        spectrum_(spectrum) {
    finish();
  }

 protected:
  double phi(int i, double s, int n) const override {
    const double lam = spectrum_[static_cast<std::size_t>(i)];
    switch (n) {
      case 0: return 0.5 * lam * s * s;
      case 1: return lam * s;
      case 2: return lam;
      default: return 0.0;
    }
  }
  double derivative_bound(int n) const override { return n == 2 ? L() : 0.0; }

 private:
  std::vector<double> spectrum_;
};

class QuarticMix final : public SeparableProblem {
 public:
  QuarticMix(std::string name, const Vector& x_star, double mu, double c4, double radius)
      : SeparableProblem(std::move(name), x_star, mu, mu + 12.0 * c4 * radius * radius, 4.0, radius),
        c4_(c4) {
    finish();
  }

 protected:
  double phi(int, double s, int n) const override {
    const double m = mu();
    switch (n) {
      case 0: return 0.5 * m * s * s + c4_ * s * s * s * s;
      case 1: return m * s + 4.0 * c4_ * s * s * s;
      case 2: return m + 12.0 * c4_ * s * s;
      case 3: return 24.0 * c4_ * s;
      case 4: return 24.0 * c4_;
      default: return 0.0;
    }
  }
  double derivative_bound(int n) const override {
    const double r = radius();
    switch (n) {
      case 2: return L();
      case 3: return 24.0 * c4_ * r;
      case 4: return 24.0 * c4_;
      default: return 0.0;
    }
  }

 private:
  double c4_;
};

class LogcoshMix final : public SeparableProblem {
 public:
  static constexpr int kMaxOrder = 12;

  LogcoshMix(std::string name, const Vector& x_star, double mu, double c, double radius)
      : SeparableProblem(std::move(name), x_star, mu, mu + c, std::numeric_limits<double>::infinity(),
                         radius),
        c_(c) {
    // d^m/ds^m tanh(s) = P_m(tanh s) with P_0(T) = T, P_{m+1}(T) = P_m'(T) (1 - T^2).
    tanh_derivs_.push_back({0.0, 1.0});
    for (int m = 0; m < kMaxOrder; ++m) {
      const auto& p = tanh_derivs_.back();
      std::vector<double> dp(p.size() > 1 ? p.size() - 1 : 1, 0.0);
      for (std::size_t a = 1; a < p.size(); ++a) dp[a - 1] = a * p[a];
      std::vector<double> next(dp.size() + 2, 0.0);
      for (std::size_t a = 0; a < dp.size(); ++a) {
        next[a] += dp[a];
        next[a + 2] -= dp[a];
      }
      tanh_derivs_.push_back(std::move(next));
    }
    // Sup of |P_m| over T in [-1, 1] on a fine grid; P_m is a low-degree polynomial.
    constexpr int kGrid = 200000;
    for (const auto& p : tanh_derivs_) {
      double sup = 0.0;
      for (int g = 0; g <= kGrid; ++g) {
        const double t = -1.0 + 2.0 * g / kGrid;
        sup = std::max(sup, std::abs(poly(p, t)));
      }
      tanh_sup_.push_back(sup * (1.0 + 1e-6));
    }
    finish();
  }

 protected:
  double phi(int, double s, int n) const override {
    const double m = mu();
    switch (n) {
      case 0: {
        const double a = std::abs(s);
        return 0.5 * m * s * s + c_ * (a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0));
      }
      case 1: return m * s + c_ * std::tanh(s);
      case 2: return m + c_ * poly(tanh_derivs_[1], std::tanh(s));
      default:
        if (n - 1 > kMaxOrder) throw ParameterError("logcosh-mix derivative order too high");
        return c_ * poly(tanh_derivs_[static_cast<std::size_t>(n - 1)], std::tanh(s));
    }
  }
  double derivative_bound(int n) const override {
    if (n == 2) return L();
    if (n - 1 > kMaxOrder || n < 2) throw ParameterError("logcosh-mix derivative order out of range");
    return c_ * tanh_sup_[static_cast<std::size_t>(n - 1)];
  }

 private:
  static double poly(const std::vector<double>& c, double t) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  double c_;
  std::vector<std::vector<double>> tanh_derivs_;
  std::vector<double> tanh_sup_;
};

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << what << " must be positive, got " << v;
    throw ParameterError(msg.str());
  }
}

}  // namespace

ProblemPtr make_quadratic(const std::vector<double>& spectrum, const Vector& x_star, double radius,
                          std::string name) {
  if (spectrum.empty()) throw ParameterError("quadratic spectrum must be non-empty");
  if (static_cast<Eigen::Index>(spectrum.size()) != x_star.size()) {
    throw ParameterError("quadratic spectrum and minimizer dimensions differ");
  }
  for (double lam : spectrum) require_positive(lam, "eigenvalue");
  require_positive(radius, "radius");
  return std::make_shared<Quadratic>(std::move(name), spectrum, x_star, radius);
}

ProblemPtr make_quartic_mix(const Vector& x_star, double mu, double c4, double radius, std::string name) {
  if (x_star.size() < 1) throw ParameterError("dimension must be at least 1");
  require_positive(mu, "mu");
  require_positive(c4, "c4");
  require_positive(radius, "radius");
  return std::make_shared<QuarticMix>(std::move(name), x_star, mu, c4, radius);
}

ProblemPtr make_logcosh_mix(const Vector& x_star, double mu, double c, double radius, std::string name) {
  if (x_star.size() < 1) throw ParameterError("dimension must be at least 1");
  require_positive(mu, "mu");
  require_positive(c, "c");
  require_positive(radius, "radius");
  return std::make_shared<LogcoshMix>(std::move(name), x_star, mu, c, radius);
}

Vector default_minimizer(int d) {
  Vector x(d);
  for (int i = 0; i < d; ++i) x[i] = (i % 2 == 0) ? 0.5 : -0.5;
  return x;
}

ProblemPtr make_problem(std::string_view name) {
  static const std::regex kQuadratic(R"(quadratic-d(\d+)-cond([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?))");
  static const std::regex kQuartic(R"(quartic-mix-d(\d+))");
  static const std::regex kLogcosh(R"(logcosh-mix-d(\d+))");
  const std::string s(name);
  std::smatch m;
  ProblemPtr p;
  const auto dim_of = [&](const std::string& text) {
    const long d = std::stol(text);
    if (d < 1 || d > 4096) throw ConfigError("problem dimension out of range in '" + s + "'");
    return static_cast<int>(d);
  };
  if (std::regex_match(s, m, kQuadratic)) {
    const int d = dim_of(m[1].str());
    const double cond = std::stod(m[2].str());
    if (!(cond >= 1.0)) throw ConfigError("condition number must be >= 1 in '" + s + "'");
    if (d == 1 && cond != 1.0) throw ConfigError("a 1-d quadratic has condition number 1");
    std::vector<double> spectrum(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) spectrum[i] = d == 1 ? 1.0 : std::pow(cond, static_cast<double>(i) / (d - 1));
    spectrum.back() = cond;
    p = make_quadratic(spectrum, default_minimizer(d), 10.0, s);
  } else if (std::regex_match(s, m, kQuartic)) {
    p = make_quartic_mix(default_minimizer(dim_of(m[1].str())), 1.0, 1.0, 1.0, s);
  } else if (std::regex_match(s, m, kLogcosh)) {
    p = make_logcosh_mix(default_minimizer(dim_of(m[1].str())), 1.0, 1.0, 2.0, s);
  } else {
    throw ConfigError("unknown problem '" + s + "'");
  }
  const auto cert = certify_problem(*p, {2.0, 3.0, 4.0});
  if (!cert.ok()) throw Error("problem '" + s + "' failed self-certification: " + cert.detail);
  return p;
}

ProblemCertificate certify_problem(const Problem& p, const std::vector<double>& betas, std::uint64_t seed,
                                   int points) {
  ProblemCertificate cert;
  std::ostringstream detail;
  RandomStream rng(seed, 0);
  const double r = p.radius();
  const auto slack = [](double v) { return 1e-10 * (1.0 + std::abs(v)); };

  for (int i = 0; i < points; ++i) {
    const Vector x = sample_ball(p.x_star(), r, rng);
    const Vector z = sample_ball(p.x_star(), r, rng);
    const double fx = p.value(x);
    const double fz = p.value(z);
    const Vector gx = p.gradient(x);

    if (fx < p.f_star() + 0.5 * p.mu() * (x - p.x_star()).squaredNorm() - slack(fx)) {
      cert.strong_convexity = false;
      detail << "strong convexity violated; ";
    }
    if (fz > fx + gx.dot(z - x) + 0.5 * p.L() * (z - x).squaredNorm() + slack(fz)) {
      cert.smoothness = false;
      detail << "L-smoothness violated; ";
    }

    Vector fd(p.dim());
    for (int j = 0; j < p.dim(); ++j) {
      const double step = 1e-5 * std::max(1.0, std::abs(x[j]));
      Vector xp = x, xm = x;
      xp[j] += step;
      xm[j] -= step;
      fd[j] = (p.value(xp) - p.value(xm)) / (2.0 * step);
    }
    const double rel = (fd - gx).norm() / std::max(gx.norm(), 1.0);
    cert.worst_gradient_error = std::max(cert.worst_gradient_error, rel);
    if (rel > 1e-6) {
      cert.gradient = false;
      detail << "gradient mismatch " << rel << "; ";
    }

    for (double beta : betas) {
      const int l = smoothness_degree(beta);
      const double remainder = std::abs(fz - p.taylor(x, z, l));
      if (remainder > p.holder_constant(beta) * std::pow((z - x).norm(), beta) + slack(fz)) {
        cert.holder = false;
        detail << "Hoelder bound violated for beta=" << beta << "; ";
      }
    }
  }
  if (std::abs(p.f_star() - p.value(p.x_star())) > 1e-12) {
    cert.strong_convexity = false;
    detail << "f_star inconsistent with f(x_star); ";
  }
  cert.detail = detail.str();
  return cert;
}

}  // namespace zoabsgd
