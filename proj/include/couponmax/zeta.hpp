#pragma once

// Riemann and Hurwitz zeta functions for real arguments.
//
// Hurwitz zeta is evaluated by direct summation of the first N terms followed
// by the q_j(1) correction series at the shifted argument a + N. The neglected
// remainder, (s)_{k+3} \int_0^1 p_{k+2}(x) zeta(s+k+3, x+a+N) dx, is bounded
// rather than computed; if the bound does not meet the requested relative
// tolerance the evaluation fails with ConvergenceError.

#include <string_view>

#include "couponmax/exact.hpp"
#include "couponmax/quadrature.hpp"

namespace couponmax {

/// A rational point p/q with q in {2, 3, 4, 6}, 0 < p < q, gcd(p, q) = 1.
class SpecialPoint {
 public:
  /// Throws DomainError for anything else.
  SpecialPoint(int p, int q);

  /// Parses a literal "p/q".
  static SpecialPoint parse(std::string_view text);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  Rational exact() const { return Rational(p_, q_); }
  double value() const noexcept { return static_cast<double>(p_) / q_; }

  friend bool operator==(const SpecialPoint&, const SpecialPoint&) = default;

 private:
  int p_;
  int q_;
};

struct ZetaEvalConfig {
  /// Accepted remainder bound relative to |zeta|; for s <= 1, where zeta has
  /// real zeros, relative to max(|zeta|, 1).
  double rel_tol = 1e-13;
  /// Leading series terms summed before the correction series. For s <= 1
  /// this is the largest shift tried; the smallest adequate shift is used.
  int direct_terms = 32;
  /// k of the correction series: q_1(1) .. q_{k+1}(1) are applied.
  int correction_order = 8;

  /// Throws DomainError unless rel_tol in (0, 1e-6], direct_terms >= 8 and
  /// 0 <= correction_order <= 12.
  void validate() const;

  /// Settings for 50-digit evaluation.
  static ZetaEvalConfig high_precision() { return {1e-37, 256, 12}; }
};

/// zeta(2j) from B_{2j}; two_j even in [2, 64], else RangeError.
template <class Real>
Real zeta_even_as(int two_j);
inline double zeta_even(int two_j) { return zeta_even_as<double>(two_j); }

/// zeta(s, a) for real s != 1 and a > 0.
template <class Real>
Real hurwitz_zeta_as(const Real& s, const Real& a, const ZetaEvalConfig& cfg);
inline double hurwitz_zeta(double s, double a, const ZetaEvalConfig& cfg = {}) {
  return hurwitz_zeta_as<double>(s, a, cfg);
}

/// zeta(-k, a) from the closed polynomial in a built from q_j(1); k <= 30.
double hurwitz_zeta_neg(int k, double a);

/// K_m(q) for q in {3, 4, 6}, 1 <= m <= 16. The bracket is summed exactly.
template <class Real>
Real km_coefficient_as(int m, int q);
inline double km_coefficient(int m, int q) {
  return km_coefficient_as<double>(m, q);
}

/// zeta(2m + 1, p/q) in closed form from zeta(2m + 1) and K_m; 1 <= m <= 16.
template <class Real>
Real hurwitz_special_odd_as(int m, const SpecialPoint& point);
double hurwitz_special_odd(int m, const SpecialPoint& point);

/// zeta(2m, 1/2) = (2^{2m} - 1) zeta(2m); 1 <= m <= 32.
double hurwitz_half_even(int m);

/// zeta(s) for integer s >= 2: even s in closed form, odd s via Hurwitz.
template <class Real>
Real zeta_integer_as(int s, const ZetaEvalConfig& cfg);
inline double zeta_integer(int s, const ZetaEvalConfig& cfg = {}) {
  return zeta_integer_as<double>(s, cfg);
}

/// zeta'(-k) for 0 <= k <= 10, with \int_0^1 p_{k+1}(x) zeta(2, x+1) dx done
/// by adaptive quadrature.
double zeta_derivative_neg(int k, const QuadratureSpec& quad = {});

}  // namespace couponmax
