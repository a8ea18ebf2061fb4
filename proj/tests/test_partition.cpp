#include <doctest.h>

#include <cmath>
#include <numbers>

#include "couponmax/errors.hpp"
#include "couponmax/partition.hpp"
#include "oracles.hpp"

using namespace couponmax;
using std::numbers::pi;

TEST_SUITE("partition") {

TEST_CASE("euler function against the product") {
  CHECK(euler_function(0.0) == 1.0);
  CHECK(euler_function(0.5) == doctest::Approx(0.2887880951).epsilon(1e-10));
  CHECK(std::abs(euler_function(0.5) - oracle::euler_product_plain(0.5)) < 1e-15);
  for (int i = 1; i <= 9; ++i) {
    const double x = 0.1 * i;
    CAPTURE(x);
    CHECK(std::abs(euler_function(x) - oracle::euler_product_plain(x)) <= 1e-12);
    CHECK(std::abs(euler_function(x) - euler_product(x, 2000)) <= 1e-12);
  }
  CHECK(std::abs(euler_function(0.99) - oracle::euler_product_plain(0.99)) <= 1e-12);
}

TEST_CASE("log of the euler function") {
  for (double x : {0.0, 0.1, 0.3, 0.49, 0.5, 0.7, 0.9, 0.99, 0.999}) {
    CAPTURE(x);
    const double ref = std::log(oracle::euler_product_plain(x));
    CHECK(std::abs(euler_function_log(x) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
  }
  for (double x : {0.5, 0.6, 0.8}) {
    CHECK(std::abs(euler_function_log(x) - std::log(euler_function(x))) < 1e-14);
  }
  CHECK_THROWS_AS(euler_function_log(1.0), DomainError);
}

TEST_CASE("euler function is decreasing") {
  double prev = euler_function(0.0);
  for (int i = 1; i < 1000; ++i) {
    const double x = i / 1000.0 * 0.95;
    const double v = euler_function(x);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("euler function domain") {
  CHECK_THROWS_AS(euler_function(-0.1), DomainError);
  CHECK_THROWS_AS(euler_function(1.0), DomainError);
}

TEST_CASE("asymptotic estimate") {
  const double at09 = std::sqrt(20 * pi) * std::exp(-pi * pi / 0.6 + pi * pi / 12);
  CHECK(euler_function_asymptotic(0.9) == doctest::Approx(at09).epsilon(1e-13));
  // sqrt(2 pi) e^{-pi^2/12}; not close to f(0) = 1.
  CHECK(euler_function_asymptotic(1e-12) == doctest::Approx(1.10128).epsilon(1e-5));
  const double ratio = oracle::euler_product_plain(0.99) / euler_function_asymptotic(0.99);
  CHECK(ratio >= 0.95);
  CHECK(ratio <= 1.05);
  CHECK(euler_function_asymptotic_log(0.9) == doctest::Approx(std::log(at09)).epsilon(1e-13));
  CHECK(euler_asymptotic_underflows(1 - 1e-3));
  CHECK(euler_function_asymptotic(1 - 1e-3) == 0.0);
  CHECK_FALSE(euler_asymptotic_underflows(0.9));
}

TEST_CASE("partition numbers") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(50) == 204226);
  CHECK(partition_count(100) == 190569292);
  const auto ref = oracle::partitions_by_parts(400);
  for (int m = 0; m <= 400; ++m) {
    CAPTURE(m);
    CHECK(partition_count(m) == ref[static_cast<std::size_t>(m)]);
  }
  CHECK_THROWS_AS(partition_count(-1), RangeError);
  CHECK_THROWS_AS(partition_count(kMaxPartitionArgument + 1), RangeError);
}

TEST_CASE("partition numbers are the coefficients of 1/f") {
  // Invert the pentagonal series as a power series.
  const int n = 30;
  std::vector<BigInt> f(n + 1, 0);
  f[0] = 1;
  for (int k = 1;; ++k) {
    const int e1 = k * (3 * k - 1) / 2;
    const int e2 = k * (3 * k + 1) / 2;
    if (e1 > n) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    f[static_cast<std::size_t>(e1)] += sign;
    if (e2 <= n) f[static_cast<std::size_t>(e2)] += sign;
  }
  std::vector<BigInt> inv(n + 1, 0);
  inv[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int j = 1; j <= m; ++j) acc -= f[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(m - j)];
    inv[static_cast<std::size_t>(m)] = acc;
  }
  for (int m = 0; m <= n; ++m) CHECK(partition_count(m) == inv[static_cast<std::size_t>(m)]);
}

TEST_CASE("partition asymptotics") {
  CHECK(partition_asymptotic(1) ==
        doctest::Approx(std::exp(pi * std::sqrt(2.0 / 3)) / (4 * std::sqrt(3.0))).epsilon(1e-14));
  CHECK(partition_asymptotic(1) == doctest::Approx(1.87667).epsilon(1e-5));
  CHECK(partition_asymptotic(100) == doctest::Approx(1.993e8).epsilon(1e-3));
  auto ratio = [](int m) {
    const double log_p = boost::multiprecision::log(HighPrecision(partition_count(m))).convert_to<double>();
    const double log_a = pi * std::sqrt(2.0 * m / 3) - std::log(4.0 * m * std::sqrt(3.0));
    return std::exp(log_a - log_p);
  };
  CHECK(partition_asymptotic(100) / partition_count(100).convert_to<double>() ==
        doctest::Approx(ratio(100)).epsilon(1e-12));
  double prev = ratio(10);
  for (int m : {100, 1000, 10000}) {
    const double r = ratio(m);
    CHECK(r < prev);
    CHECK(r > 1.0);
    prev = r;
  }
}

}
