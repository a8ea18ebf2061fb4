#include "couponmax/maxprob.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "couponmax/errors.hpp"
#include "couponmax/partition.hpp"

namespace couponmax {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

void check_index(int m, const char* who) {
  if (m < 1 || m > kMaxArgmaxIndex) {
    throw RangeError(std::string(who) + ": m must lie in [1, 10000], got " +
                     std::to_string(m));
  }
}

// log of m x^{m-1} / (1 - x^m) for 0 < x < 1.
double log_gap_weight(int m, double x) {
  const double log_x = std::log(x);
  return std::log(static_cast<double>(m)) + (m - 1) * log_x -
         std::log(-std::expm1(m * log_x));
}

double log_argmax_asymptotic(int m) {
  return std::log(kPi * std::sqrt(2.0 * m)) -
         kPi * std::sqrt(2.0 / 3.0) * std::sqrt(static_cast<double>(m));
}

// log10 of a bound on \int_{1-d}^1 m x^{m-1} f(x)/(1-x^m) dx.
// Uses m x^{m-1}/(1-x^m) <= 1/(1-x), and log f(x) <= -Li_2(x)/(1-x) (from
// 1 - x^k <= k(1-x)), with Li_2(1-d) bounded below by a partial sum. Then
// \int_0^d e^{-c/y}/y dy = E_1(c/d) <= (d/c) e^{-c/d}.
double tail_log10_bound(double cutoff) {
  const double x = 1.0 - cutoff;
  double li2 = 0.0;
  double power = 1.0;
  for (int k = 1; k <= 64; ++k) {
    power *= x;
    li2 += power / (static_cast<double>(k) * k);
  }
  const double log_bound = std::log(cutoff / li2) - li2 / cutoff;
  return log_bound / std::log(10.0);
}

std::vector<double> peak_hints(int m) {
  if (m < 2) return {};
  const double y0 = peak_location(m).y0;
  std::vector<double> hints;
  for (double scale : {2.0, 1.0, 0.5}) {
    const double x = 1.0 - scale * y0;
    if (x > 0.0 && x < 1.0 - kTailCutoff) hints.push_back(x);
  }
  return hints;
}

// The integrand is divided by the asymptotic magnitude so that abs_tol acts
// on a quantity of order one for every m.
ArgmaxIntegral integrate_gap(int m, const QuadratureSpec& spec,
                             const Integrand& log_envelope) {
  const auto hints = peak_hints(m);
  const double log_scale = log_argmax_asymptotic(m);
  const auto result = integrate(
      [&](double x) {
        return std::exp(log_gap_weight(m, x) + log_envelope(x) - log_scale);
      },
      0.0, 1.0 - kTailCutoff, spec, hints);
  const double scale = std::exp(log_scale);
  ArgmaxIntegral out;
  out.value = result.value * scale;
  out.error_estimate = result.error_estimate * scale;
  out.tail_log10_bound = tail_log10_bound(kTailCutoff);
  if (std::abs(out.value) < 1e-300) {
    out.value = 0.0;
    out.certified_underflow = true;
  }
  return out;
}

}  // namespace

ArgmaxIntegral argmax_probability_detailed(int m, const QuadratureSpec& spec) {
  check_index(m, "argmax_probability");
  return integrate_gap(m, spec, [](double x) { return euler_function_log(x); });
}

double argmax_probability(int m, const QuadratureSpec& spec) {
  return argmax_probability_detailed(m, spec).value;
}

double argmax_asymptotic(int m) {
  if (m < 1) throw DomainError("argmax_asymptotic: m must be >= 1");
  return kPi * std::sqrt(2.0 * m) *
         std::exp(-kPi * std::sqrt(2.0 / 3.0) * std::sqrt(static_cast<double>(m)));
}

ArgmaxIntegral hr_integral_detailed(int m, const QuadratureSpec& spec) {
  check_index(m, "hr_integral");
  return integrate_gap(m, spec, [](double x) { return euler_function_asymptotic_log(x); });
}

double hr_integral(int m, const QuadratureSpec& spec) {
  return hr_integral_detailed(m, spec).value;
}

double hr_integral_m1_closed() {
  return 4.0 * std::sqrt(3.0) * std::exp(kPi * kPi / 12.0) *
         normal_cdf_complement(kPi * std::sqrt(3.0) / 3.0);
}

PeakEstimate peak_location(int m) {
  if (m < 2) throw DomainError("peak_location: m must be >= 2");
  const double b = kPi * kPi / 6.0;
  const double root = std::sqrt(4.0 * b * m + b * b - 5.0 * b + 0.25);
  return {m, (-0.5 - b + root) / (2.0 * m - 3.0), b};
}

std::vector<ArgmaxRow> table1(std::span<const int> rows,
                              const QuadratureSpec& spec) {
  for (int m : rows) check_index(m, "table1");
  std::vector<std::future<ArgmaxRow>> pending;
  pending.reserve(rows.size());
  for (int m : rows) {
    pending.push_back(std::async(std::launch::async, [m, spec] {
      return ArgmaxRow{m, argmax_probability(m, spec), argmax_asymptotic(m),
                       hr_integral(m, spec)};
    }));
  }
  std::vector<ArgmaxRow> out;
  out.reserve(rows.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace couponmax
