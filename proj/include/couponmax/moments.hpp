#pragma once

// Moments of M = sup_i X_i, X_i ~ Exp(i) independent, by three routes:
//   series    k! 2^k g(k), g the alternating series over pentagonal factors
//   hurwitz   closed form in zeta(2j) and zeta(j, {1/6, 1/3, 2/3, 5/6})
//   bernoulli closed form in pi, sqrt(3) and Bernoulli numbers only
// The closed forms cancel badly (terms ~ 6^k C(2k-2, k-1)), so both are
// evaluated in 50-digit arithmetic and rounded once.

#include <vector>

namespace couponmax {

inline constexpr int kMaxMomentOrder = 16;

/// 1/(x^k (1+ax)^k) = sum_j c_j / x^j + sum_j d_j / (1+ax)^j, j = 1..k.
struct PartialFractionCoeffs {
  int k = 0;
  double a = 0.0;
  std::vector<double> c;  // c[j-1] = C(2k-j-1, k-1) (-a)^{k-j}
  std::vector<double> d;  // d[j-1] = C(2k-j-1, k-1) (-a)^k

  /// The decomposition evaluated at x (x != 0, 1 + a x != 0).
  double evaluate(double x) const;
};

/// Throws DomainError for k < 1 or a == 0.
PartialFractionCoeffs partial_fraction_coeffs(int k, double a);

/// g(k) = sum_{m>=1} (-1)^{m+1} [1/(m^k (3m-1)^k) + 1/(m^k (3m+1)^k)],
/// summed until the next term drops below rel_tol * |partial sum|.
double g_series(int k, double rel_tol);

double moment_series(int k);
double moment_hurwitz(int k);
double moment_bernoulli(int k);

struct MomentReport {
  int k = 0;
  double via_series = 0.0;
  double via_hurwitz = 0.0;
  double via_bernoulli = 0.0;
  double max_rel_disagreement = 0.0;
};

MomentReport moment_report(int k);

struct MeanVariance {
  double mean = 0.0;
  double variance = 0.0;
};

/// E(M) and V(M) = E(M^2) - E(M)^2 from the Bernoulli closed form.
MeanVariance mean_variance();

/// 4 sqrt(3) pi / 3 - 6.
double mean_closed_form();
/// -4 pi^2 - 32 sqrt(3) pi + 216.
double second_moment_closed_form();
/// -28 pi^2 / 3 - 16 sqrt(3) pi + 180.
double variance_closed_form();

/// f(-1) = 2 sqrt(3) pi / 9 - 1 where f(x) = sum (x^{3m-1}/(3m-1) - x^{3m+1}/(3m+1)).
double arctan_series_value();

struct AlternatingSum {
  double value = 0.0;
  double lower = 0.0;  // the true sum lies in [lower, upper]
  double upper = 0.0;
  long long terms = 0;
};

/// sum_{m>=1} (-1)^{m+1} [1/(3m-1) - 1/(3m+1)] by direct summation; the
/// estimate is the midpoint of the last two partial sums.
AlternatingSum arctan_series_direct(double abs_tol);

}  // namespace couponmax
