#pragma once

// P(X_m = M) for independent X_i ~ Exp(i): the probability that the m-th
// variable is the overall maximum, together with its large-m asymptotics and
// the comparison integral in which f is replaced by its Hardy-Ramanujan
// estimate.

#include <span>
#include <vector>

#include "couponmax/quadrature.hpp"

namespace couponmax {

inline constexpr int kMaxArgmaxIndex = 10'000;

/// Integration stops at x = 1 - kTailCutoff; the remainder is bounded.
inline constexpr double kTailCutoff = 1e-3;

struct ArgmaxRow {
  int m = 0;
  double exact = 0.0;
  double asymptotic = 0.0;
  double hr_integral = 0.0;
};

/// Maximum of J_m(y) = (1-y)^{m-1} y^{-1/2} e^{-b/y}, in y = 1 - x.
struct PeakEstimate {
  int m = 0;
  double y0 = 0.0;
  double b_eff = 0.0;
};

struct ArgmaxIntegral {
  double value = 0.0;
  double error_estimate = 0.0;
  /// log10 of a rigorous bound on the neglected integral over [1 - cutoff, 1].
  double tail_log10_bound = 0.0;
  /// Set when value < 1e-300 and has been reported as exact 0.
  bool certified_underflow = false;
};

/// \int_0^1 m x^{m-1} f(x) / (1 - x^m) dx with f Euler's function, taken
/// over [0, 1 - kTailCutoff]. The integrand is evaluated in log space and
/// divided by argmax_asymptotic(m), so spec.abs_tol is relative to that
/// magnitude.
ArgmaxIntegral argmax_probability_detailed(int m, const QuadratureSpec& spec = {});
double argmax_probability(int m, const QuadratureSpec& spec = {});

/// pi sqrt(2m) e^{-pi sqrt(2/3) sqrt(m)}.
double argmax_asymptotic(int m);

/// The argmax integral with f replaced by the Hardy-Ramanujan estimate.
ArgmaxIntegral hr_integral_detailed(int m, const QuadratureSpec& spec = {});
double hr_integral(int m, const QuadratureSpec& spec = {});

/// hr_integral(1) in closed form: 4 sqrt(3) e^{pi^2/12} (1 - Phi(pi/sqrt(3))).
double hr_integral_m1_closed();

/// Peak of J_m with b = pi^2/6; m >= 2.
PeakEstimate peak_location(int m);

/// Rows are computed concurrently and returned in input order.
std::vector<ArgmaxRow> table1(std::span<const int> rows,
                              const QuadratureSpec& spec = {});

}  // namespace couponmax
