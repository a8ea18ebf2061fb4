#pragma once

// Finite-n coupon collector quantities. Gap j (0 <= j < n) waits
// W_j ~ Exp((n-j)/n) in the continuous model and D_j ~ Geometric((n-j)/n) in
// the discrete one; offset m refers to gap n - m.

#include "couponmax/quadrature.hpp"

namespace couponmax {

inline constexpr int kMaxFiniteN = 10'000;

struct FiniteModelParams {
  int n = 1;
  int m = 1;
  int k = 1;

  /// Throws RangeError unless 1 <= m <= n <= 1e4 and k >= 1.
  void validate() const;
};

/// E((W_(n)/n)^k) = \int_0^inf k t^{k-1} (1 - prod_{j<=n} (1 - e^{-jt})) dt,
/// integrated over x = e^{-t} in [0, 1]. 1 <= n <= 1e4, 1 <= k <= 8.
double finite_max_moment(int n, int k, const QuadratureSpec& spec = {});

/// P(W_{n-m} = W_(n)) = \int_0^1 m x^{m-1} prod_{j<=n, j!=m} (1 - x^j) dx.
double finite_argmax_continuous(int m, int n, const QuadratureSpec& spec = {});

/// P(D_{n-m} > D_i for all i != n-m), the strict discrete maximum, summed
/// until the geometric tail (1 - m/n)^J drops below tail_tol.
double discrete_argmax_probability(int m, int n, double tail_tol = 1e-12);

/// n H_n, the expected number of draws to complete the collection.
double expected_total_draws(int n);

}  // namespace couponmax
