#include "couponmax/finite.hpp"

#include <cmath>
#include <string>

#include "couponmax/errors.hpp"

namespace couponmax {

namespace {

void check_pair(int m, int n, const char* who) {
  if (n < 1 || n > kMaxFiniteN || m < 1 || m > n) {
    throw RangeError(std::string(who) + ": need 1 <= m <= n <= 10000");
  }
}

// log prod_{j=1..n, j != skip} (1 - x^j), for 0 < x < 1.
double log_partial_product(double x, int n, int skip) {
  double log_prod = 0.0;
  double power = 1.0;
  for (int j = 1; j <= n; ++j) {
    power *= x;
    if (power < 1e-18 * std::abs(log_prod) || power == 0.0) break;
    if (j == skip) continue;
    log_prod += std::log1p(-power);
  }
  return log_prod;
}

}  // namespace

void FiniteModelParams::validate() const {
  check_pair(m, n, "FiniteModelParams");
  if (k < 1) throw RangeError("FiniteModelParams: k must be >= 1");
}

double finite_max_moment(int n, int k, const QuadratureSpec& spec) {
  if (n < 1 || n > kMaxFiniteN) {
    throw RangeError("finite_max_moment: n must lie in [1, 10000]");
  }
  if (k < 1 || k > 8) throw RangeError("finite_max_moment: k must lie in [1, 8]");
  // With t = -log x: k t^{k-1} (1 - F(t)) dt = k t^{k-1} (1 - F) dx / x.
  auto integrand = [n, k](double x) {
    const double t = -std::log(x);
    const double survival = -std::expm1(log_partial_product(x, n, 0));
    return k * std::pow(t, k - 1) * survival / x;
  };
  return integrate(integrand, 0.0, 1.0, spec).value;
}

double finite_argmax_continuous(int m, int n, const QuadratureSpec& spec) {
  check_pair(m, n, "finite_argmax_continuous");
  auto integrand = [m, n](double x) {
    const double log_x = std::log(x);
    return m * std::exp((m - 1) * log_x + log_partial_product(x, n, m));
  };
  return integrate(integrand, 0.0, 1.0, spec).value;
}

double discrete_argmax_probability(int m, int n, double tail_tol) {
  if (n < 1 || m < 1 || m > n) {
    throw RangeError("discrete_argmax_probability: need 1 <= m <= n");
  }
  if (!(tail_tol > 0.0 && tail_tol <= 1e-8)) {
    throw DomainError("discrete_argmax_probability: tail_tol must lie in (0, 1e-8]");
  }
  const double p = static_cast<double>(m) / n;
  const double q = 1.0 - p;  // geometric continuation probability of gap n-m
  double sum = 0.0;
  double compensation = 0.0;
  double tail = 1.0;  // q^{j-1} = P(D_{n-m} >= j)
  for (long long j = 1;; ++j) {
    // Every other gap must be strictly shorter than j.
    double log_prod = 0.0;
    bool zero = false;
    for (int i = 1; i <= n; ++i) {
      if (i == m) continue;
      const double r = std::pow(1.0 - static_cast<double>(i) / n,
                                static_cast<double>(j - 1));
      if (r >= 1.0) {
        zero = true;
        break;
      }
      if (r < 1e-18) break;  // r decreases in i; remaining factors are 1
      log_prod += std::log1p(-r);
    }
    const double term = zero ? 0.0 : tail * p * std::exp(log_prod);
    const double t = sum + term;
    compensation += std::abs(sum) >= std::abs(term) ? (sum - t) + term
                                                    : (term - t) + sum;
    sum = t;
    tail *= q;
    if (tail < tail_tol) break;
  }
  return sum + compensation;
}

double expected_total_draws(int n) {
  if (n < 1) throw RangeError("expected_total_draws: n must be >= 1");
  double harmonic = 0.0;
  for (int i = n; i >= 1; --i) harmonic += 1.0 / i;
  return n * harmonic;
}

}  // namespace couponmax
