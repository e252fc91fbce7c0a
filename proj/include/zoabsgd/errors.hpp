#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace zoabsgd {

using Vector = Eigen::VectorXd;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Out-of-range construction parameter (negative step, bad eigenvalue, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function (e.g. kernel evaluated at |u| > 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The objective returned a non-finite value.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, Vector point) : Error(what), point_(std::move(point)) {}
  const Vector& point() const noexcept { return point_; }

 private:
  Vector point_;
};

/// A certification was requested that the problem cannot support.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Invalid or inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace zoabsgd
