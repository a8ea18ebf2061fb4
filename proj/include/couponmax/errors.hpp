#pragma once

#include <stdexcept>
#include <string>

namespace couponmax {

/// Argument outside the mathematical domain of a function (a <= 0, s = 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument inside the domain but outside the supported index range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An iterative or adaptive method could not reach the requested tolerance.
/// Carries whatever partial answer was available when it gave up.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial_value,
                   double error_estimate)
      : std::runtime_error(what),
        partial_value_(partial_value),
        error_estimate_(error_estimate) {}

  double partial_value() const noexcept { return partial_value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double partial_value_;
  double error_estimate_;
};

/// A request would exceed a configured work budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace couponmax
