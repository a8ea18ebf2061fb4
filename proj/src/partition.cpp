#include "couponmax/partition.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "couponmax/errors.hpp"

namespace couponmax {

namespace {

constexpr double kUnderflowExponent = -745.0;

}  // namespace

void PentagonalSeriesConfig::validate() const {
  if (!(term_tol > 0.0 && term_tol <= 1e-12)) {
    throw DomainError("pentagonal term_tol must lie in (0, 1e-12]");
  }
  if (max_terms < 64) throw DomainError("pentagonal max_terms must be >= 64");
}

double euler_function(double x, const PentagonalSeriesConfig& cfg) {
  cfg.validate();
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("euler_function: x must lie in [0, 1)");
  }
  if (x == 0.0) return 1.0;

  const long double log_x = std::log(static_cast<long double>(x));
  long double sum = 1.0L;
  for (int m = 1; m <= cfg.max_terms; ++m) {
    const long double e1 = static_cast<long double>(m) * (3 * m - 1) / 2;
    const long double e2 = e1 + m;
    const long double pair = std::exp(e1 * log_x) + std::exp(e2 * log_x);
    sum += (m % 2 == 1) ? -pair : pair;
    const long double e_next = static_cast<long double>(m + 1) * (3 * m + 2) / 2;
    const long double next = std::exp(e_next * log_x);
    if (next < static_cast<long double>(cfg.term_tol) *
                   std::max(1.0L, std::abs(sum))) {
      return static_cast<double>(sum);
    }
  }
  throw ConvergenceError("euler_function: max_terms reached",
                         static_cast<double>(sum), 1.0);
}

double euler_function_log(double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("euler_function_log: x must lie in [0, 1)");
  }
  if (x < 0.5) return std::log(euler_function(x));
  // f(e^{-t}) = sqrt(2 pi / t) exp(-pi^2/(6t) + t/24) f(e^{-4 pi^2 / t}).
  const double pi = boost::math::constants::pi<double>();
  const double t = -std::log(x);
  const double dual = std::exp(-4.0 * pi * pi / t);  // below 2e-25 here
  return 0.5 * std::log(2.0 * pi / t) - pi * pi / (6.0 * t) + t / 24.0 +
         std::log1p(-dual);
}

double euler_product(double x, int terms) {
  long double log_prod = 0.0L;
  long double power = 1.0L;
  for (int j = 1; j <= terms; ++j) {
    power *= x;
    log_prod += std::log1p(-power);
  }
  return static_cast<double>(std::exp(log_prod));
}

double euler_function_asymptotic_log(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("euler_function_asymptotic: x must lie in (0, 1)");
  }
  const double pi = boost::math::constants::pi<double>();
  const double y = 1.0 - x;
  return 0.5 * std::log(2.0 * pi / y) - pi * pi / (6.0 * y) + pi * pi / 12.0;
}

bool euler_asymptotic_underflows(double x) {
  return euler_function_asymptotic_log(x) < kUnderflowExponent;
}

double euler_function_asymptotic(double x) {
  const double log_value = euler_function_asymptotic_log(x);
  if (log_value < kUnderflowExponent) return 0.0;
  return std::exp(log_value);
}

BigInt partition_count(int m) {
  if (m < 0 || m > kMaxPartitionArgument) {
    throw RangeError("partition_count: m must lie in [0, 100000], got " +
                     std::to_string(m));
  }
  static std::mutex mutex;
  static std::vector<BigInt> memo{BigInt(1)};

  std::lock_guard lock(mutex);
  for (int n = static_cast<int>(memo.size()); n <= m; ++n) {
    BigInt value = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int g2 = g1 + k;
      BigInt pair = memo[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) pair += memo[static_cast<std::size_t>(n - g2)];
      if (k % 2 == 1) {
        value += pair;
      } else {
        value -= pair;
      }
    }
    memo.push_back(std::move(value));
  }
  return memo[static_cast<std::size_t>(m)];
}

double partition_asymptotic(int m) {
  if (m < 1) throw DomainError("partition_asymptotic: m must be >= 1");
  const double pi = boost::math::constants::pi<double>();
  return std::exp(pi * std::sqrt(2.0 * m / 3.0)) / (4.0 * m * std::sqrt(3.0));
}

}  // namespace couponmax
