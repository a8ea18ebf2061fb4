#pragma once

#include <functional>
#include <span>

namespace couponmax {

struct QuadratureSpec {
  double abs_tol = 1e-14;
  double rel_tol = 1e-10;
  int max_subdivisions = 10'000;

  /// Throws DomainError unless abs_tol > 0, rel_tol in (0, 1e-6] and
  /// 1 <= max_subdivisions <= 1e6.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive 15-point Gauss-Kronrod quadrature with embedded 7-point Gauss
/// error estimate and global bisection of the worst interval.
///
/// The rule never samples the endpoints, so integrands only need to be finite
/// on the open interval. `breakpoints` seeds the initial partition (points
/// outside (lo, hi) are ignored). A non-finite integrand value throws
/// DomainError; running out of subdivisions throws ConvergenceError carrying
/// the partial value and error estimate.
QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           const QuadratureSpec& spec = {},
                           std::span<const double> breakpoints = {});

/// 1 - Phi(z) for the standard normal distribution.
double normal_cdf_complement(double z);

}  // namespace couponmax
