#pragma once

// Euler's function f(x) = prod_{j>=1} (1 - x^j), its pentagonal-number
// expansion, the partition numbers p(m) it generates (1/f = sum p(m) x^m),
// and the Hardy-Ramanujan asymptotics of both.

#include "couponmax/exact.hpp"

namespace couponmax {

struct PentagonalSeriesConfig {
  double term_tol = 1e-18;
  int max_terms = 8192;

  /// Throws DomainError unless term_tol in (0, 1e-12] and max_terms >= 64.
  void validate() const;
};

/// f(x) = 1 + sum_{m>=1} (-1)^m (x^{m(3m-1)/2} + x^{m(3m+1)/2}) for x in [0, 1),
/// accumulated in extended precision. Absolute error is a few units of 1e-18
/// times the number of significant terms; near x = 1 the true value is far
/// below that and the result is noise at that level.
double euler_function(double x, const PentagonalSeriesConfig& cfg = {});

/// log f(x) with small relative error on all of [0, 1): the series for
/// x < 1/2, the modular transformation of f for x >= 1/2.
double euler_function_log(double x);

/// f(x) by the truncated product prod_{j<=terms} (1 - x^j); test reference.
double euler_product(double x, int terms);

/// sqrt(2 pi/(1-x)) exp(-pi^2/(6(1-x)) + pi^2/12), x in (0, 1). Returns exact
/// 0 when the exponent is below -745 (see euler_asymptotic_underflows).
double euler_function_asymptotic(double x);

/// True when euler_function_asymptotic(x) is reported as a certified 0.
bool euler_asymptotic_underflows(double x);

/// Natural log of the Hardy-Ramanujan estimate; never underflows.
double euler_function_asymptotic_log(double x);

inline constexpr int kMaxPartitionArgument = 100'000;

/// p(m) exactly via the pentagonal recurrence; memoized, 0 <= m <= 1e5.
BigInt partition_count(int m);

/// e^{pi sqrt(2m/3)} / (4 m sqrt(3)), m >= 1.
double partition_asymptotic(int m);

}  // namespace couponmax
