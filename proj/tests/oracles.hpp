#pragma once

// Reference computations kept independent of the library code paths.

#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Akiyama-Tanigawa; yields B_1 = +1/2, flipped here to -1/2.
inline std::vector<cpp_rational> bernoulli_table(int n_max) {
  std::vector<cpp_rational> a(static_cast<std::size_t>(n_max + 1));
  std::vector<cpp_rational> out;
  for (int m = 0; m <= n_max; ++m) {
    a[static_cast<std::size_t>(m)] = cpp_rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] =
          j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
    out.push_back(a[0]);
  }
  if (n_max >= 1) out[1] = -out[1];
  return out;
}

// sum_{n < terms} (n + a)^{-s} plus the tail \int_b^\infty + f(b)/2 - f'(b)/12;
// half_width is the size of the next correction.
struct SeriesValue {
  double value;
  double half_width;
};

inline SeriesValue hurwitz_brute(double s, double a, std::int64_t terms = 1'000'000) {
  long double sum = 0.0L;
  for (std::int64_t n = terms - 1; n >= 0; --n) {
    sum += std::pow(static_cast<long double>(n) + a, -static_cast<long double>(s));
  }
  const long double b = static_cast<long double>(terms) + a;
  const long double integral = std::pow(b, 1.0L - s) / (s - 1.0L);
  const long double first = std::pow(b, -static_cast<long double>(s));
  const long double slope = s * first / b / 12;
  const long double next = s * (s + 1.0L) * (s + 2.0L) * first / (b * b * b) / 720;
  return {static_cast<double>(sum + integral + first / 2 + slope), static_cast<double>(next)};
}

// Number of partitions of every m <= m_max by the coin-change recursion.
inline std::vector<cpp_int> partitions_by_parts(int m_max) {
  std::vector<cpp_int> ways(static_cast<std::size_t>(m_max + 1), 0);
  ways[0] = 1;
  for (int part = 1; part <= m_max; ++part) {
    for (int m = part; m <= m_max; ++m) {
      ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - part)];
    }
  }
  return ways;
}

// f(x) by the plain product, stopping once x^j is below 1e-18.
inline double euler_product_plain(double x) {
  long double prod = 1.0L;
  long double power = x;
  for (int j = 1; j < 1'000'000 && power > 1e-20L; ++j) {
    prod *= 1.0L - power;
    power *= x;
  }
  return static_cast<double>(prod);
}

// Composite Simpson on [lo, hi] with `panels` (even) panels.
template <class F>
double simpson(F f, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  long double sum = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) {
    sum += (i % 2 == 1 ? 4.0L : 2.0L) * f(lo + i * h);
  }
  return static_cast<double>(sum * h / 3.0L);
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace oracle
