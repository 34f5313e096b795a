#pragma once

#include <stdexcept>
#include <string>

namespace sgtail {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative numerics (quadrature, minimization) gave up before meeting tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double partial_value, double error_estimate)
      : std::runtime_error(what), partial_value_(partial_value), error_estimate_(error_estimate) {}

  double partial_value() const noexcept { return partial_value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double partial_value_;
  double error_estimate_;
};

/// Input data unusable for the requested statistic.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sample with zero variance where a nonzero one is required.
class DegenerateSample : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace sgtail
