#pragma once

#include <stdexcept>
#include <string>

namespace linpot {

// Invalid configuration or argument (bad profile parameters, malformed
// JSON, out-of-range options).  CLI exit code 2.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A profile or solution was evaluated outside its certified time domain.
class DomainError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Numeric evaluation failure (NaN/Inf encountered).  CLI exit code 3.
class EvaluationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature did not reach the requested tolerance.  Carries the
// best estimate and its error bound so callers can decide to proceed.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& msg, double estimate, double error_bound)
      : std::runtime_error(msg), estimate_(estimate), error_bound_(error_bound) {}
  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

private:
  double estimate_;
  double error_bound_;
};

// Norm drift or boundary contamination in a propagation run.  CLI exit
// code 4.
class StabilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace linpot
