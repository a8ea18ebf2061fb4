#include "couponmax/moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "couponmax/errors.hpp"
#include "couponmax/exact.hpp"
#include "couponmax/zeta.hpp"

namespace couponmax {

namespace {

void check_order(int k, const char* who) {
  if (k < 1 || k > kMaxMomentOrder) {
    throw RangeError(std::string(who) + ": k must lie in [1, 16], got " +
                     std::to_string(k));
  }
}

HighPrecision binom_hp(int n, int k) {
  return HighPrecision(binomial_exact(n, k));
}

HighPrecision pi_hp() { return boost::math::constants::pi<HighPrecision>(); }

// Compensated running sum.
struct Neumaier {
  double sum = 0.0;
  double compensation = 0.0;
  void add(double x) {
    const double t = sum + x;
    compensation += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + compensation; }
};

// (-1)^j (zeta(j,1/3) - zeta(j,5/6)) + zeta(j,2/3) - zeta(j,1/6) + 6^j for
// j = 2..16. Even j via the sum identities; odd j by direct Hurwitz
// evaluation at the four points.
const std::array<HighPrecision, kMaxMomentOrder + 1>& hurwitz_combinations() {
  static const auto table = [] {
    std::array<HighPrecision, kMaxMomentOrder + 1> out{};
    const ZetaEvalConfig cfg = ZetaEvalConfig::high_precision();
    using boost::multiprecision::pow;
    for (int j = 2; j <= kMaxMomentOrder; ++j) {
      const HighPrecision six_j = pow(HighPrecision(6), j);
      if (j % 2 == 0) {
        const HighPrecision z = zeta_even_as<HighPrecision>(j);
        out[static_cast<std::size_t>(j)] =
            six_j * (1 + z * (2 / pow(HighPrecision(2), j) +
                              1 / pow(HighPrecision(3), j) - 2 / six_j - 1));
      } else {
        const HighPrecision s(j);
        auto hz = [&](int p, int q) {
          return hurwitz_zeta_as<HighPrecision>(s, HighPrecision(p) / q, cfg);
        };
        out[static_cast<std::size_t>(j)] =
            -hz(1, 3) + hz(2, 3) + hz(5, 6) - hz(1, 6) + six_j;
      }
    }
    return out;
  }();
  return table;
}

}  // namespace

double PartialFractionCoeffs::evaluate(double x) const {
  double out = 0.0;
  const double y = 1.0 + a * x;
  for (int j = 1; j <= k; ++j) {
    out += c[static_cast<std::size_t>(j - 1)] / std::pow(x, j) +
           d[static_cast<std::size_t>(j - 1)] / std::pow(y, j);
  }
  return out;
}

PartialFractionCoeffs partial_fraction_coeffs(int k, double a) {
  if (k < 1) throw DomainError("partial_fraction_coeffs: k must be >= 1");
  if (a == 0.0) throw DomainError("partial_fraction_coeffs: a must be nonzero");
  PartialFractionCoeffs out{k, a, {}, {}};
  const double minus_a_k = std::pow(-a, k);
  for (int j = 1; j <= k; ++j) {
    const double binom = binomial_exact(2 * k - j - 1, k - 1).convert_to<double>();
    out.c.push_back(binom * std::pow(-a, k - j));
    out.d.push_back(binom * minus_a_k);
  }
  return out;
}

double g_series(int k, double rel_tol) {
  if (k < 1) throw DomainError("g_series: k must be >= 1");
  if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) {
    throw DomainError("g_series: rel_tol must lie in (0, 1e-6]");
  }
  auto inverse_power = [k](double base) {
    double out = 1.0;
    const double inv = 1.0 / base;
    for (int i = 0; i < k; ++i) out *= inv;
    return out;
  };
  auto term = [&](double m) {
    return inverse_power(m * (3 * m - 1)) + inverse_power(m * (3 * m + 1));
  };
  Neumaier sum;
  double m = 1.0;
  for (;; m += 1.0) {
    const double t = term(m);
    sum.add(std::fmod(m, 2.0) == 1.0 ? t : -t);
    const double next = term(m + 1.0);
    if (next < rel_tol * std::abs(sum.value())) {
      // The limit lies between this partial sum and the next one.
      const double sign = std::fmod(m + 1.0, 2.0) == 1.0 ? 1.0 : -1.0;
      sum.add(0.5 * sign * next);
      return sum.value();
    }
  }
}

double moment_series(int k) {
  check_order(k, "moment_series");
  double scale = 1.0;
  for (int i = 1; i <= k; ++i) scale *= 2.0 * i;
  return scale * g_series(k, 1e-13);
}

double moment_hurwitz(int k) {
  check_order(k, "moment_hurwitz");
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const HighPrecision root3 = sqrt(HighPrecision(3));

  HighPrecision bracket = -pow(HighPrecision(6), k) *
                          (2 * pi_hp() / (3 * root3) - 1) *
                          binom_hp(2 * k - 2, k - 1);
  for (int j = 1; j <= k / 2; ++j) {
    bracket += pow(HighPrecision(2), k + 1) * binom_hp(2 * k - 2 * j - 1, k - 1) *
               pow(HighPrecision(3), k - 2 * j) *
               zeta_even_as<HighPrecision>(2 * j) *
               (1 - pow(HighPrecision(2), 1 - 2 * j));
  }
  const auto& combos = hurwitz_combinations();
  for (int j = 2; j <= k; ++j) {
    bracket += binom_hp(2 * k - j - 1, k - 1) * pow(HighPrecision(6), k - j) *
               combos[static_cast<std::size_t>(j)];
  }
  HighPrecision out = HighPrecision(factorial_exact(k)) * bracket;
  if (k % 2 == 1) out = -out;
  return static_cast<double>(out);
}

double moment_bernoulli(int k) {
  check_order(k, "moment_bernoulli");
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const HighPrecision pi = pi_hp();
  const HighPrecision root3 = sqrt(HighPrecision(3));

  HighPrecision bracket = binom_hp(2 * k - 1, k) -
                          2 * pi / (3 * root3) * binom_hp(2 * k - 2, k - 1);

  for (int j = 1; j <= k / 2; ++j) {
    // (2^{2j-1} - 1)(1 - 3/3^{2j}) as an exact rational.
    const Rational factor =
        Rational(BigInt(1) << (2 * j - 1)) - 1;
    Rational three_part = 1 - Rational(3) / Rational(boost::multiprecision::pow(BigInt(3), 2 * j));
    const Rational exact_part = bernoulli_exact(2 * j) * factor * three_part /
                                Rational(factorial_exact(2 * j));
    HighPrecision term = pow(pi, 2 * j) * to_real<HighPrecision>(exact_part) *
                         binom_hp(2 * k - 2 * j - 1, k - 1);
    bracket += (j % 2 == 0) ? term : HighPrecision(-term);
  }

  HighPrecision odd_sum = 0;
  for (int j = 1; j <= (k - 1) / 2; ++j) {
    Rational inner = Rational(3 * j + 1) / Rational(factorial_exact(2 * j + 1));
    for (int l = 1; l <= j; ++l) {
      inner -= 3 * Rational(boost::multiprecision::pow(BigInt(6), 2 * l - 1)) *
               bernoulli_exact(2 * l) /
               Rational(factorial_exact(2 * j - 2 * l + 1) *
                        factorial_exact(2 * l));
    }
    HighPrecision term = pow(pi / 3, 2 * j + 1) *
                         binom_hp(2 * k - 2 * j - 2, k - 1) *
                         to_real<HighPrecision>(inner);
    odd_sum += (j % 2 == 0) ? term : HighPrecision(-term);
  }
  bracket -= 2 / root3 * odd_sum;

  HighPrecision out = HighPrecision(factorial_exact(k)) *
                      pow(HighPrecision(6), k) * bracket;
  if (k % 2 == 1) out = -out;
  return static_cast<double>(out);
}

MomentReport moment_report(int k) {
  MomentReport r;
  r.k = k;
  r.via_series = moment_series(k);
  r.via_hurwitz = moment_hurwitz(k);
  r.via_bernoulli = moment_bernoulli(k);
  auto rel = [](double x, double y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
  };
  r.max_rel_disagreement =
      std::max({rel(r.via_series, r.via_hurwitz),
                rel(r.via_series, r.via_bernoulli),
                rel(r.via_hurwitz, r.via_bernoulli)});
  return r;
}

MeanVariance mean_variance() {
  const double mean = moment_bernoulli(1);
  const double second = moment_bernoulli(2);
  return {mean, second - mean * mean};
}

double mean_closed_form() {
  const double pi = boost::math::constants::pi<double>();
  return 4.0 * std::sqrt(3.0) * pi / 3.0 - 6.0;
}

double second_moment_closed_form() {
  const double pi = boost::math::constants::pi<double>();
  return -4.0 * pi * pi - 32.0 * std::sqrt(3.0) * pi + 216.0;
}

double variance_closed_form() {
  const double pi = boost::math::constants::pi<double>();
  return -28.0 * pi * pi / 3.0 - 16.0 * std::sqrt(3.0) * pi + 180.0;
}

double arctan_series_value() {
  const double pi = boost::math::constants::pi<double>();
  return 2.0 * std::sqrt(3.0) * pi / 9.0 - 1.0;
}

AlternatingSum arctan_series_direct(double abs_tol) {
  if (!(abs_tol > 0.0)) throw DomainError("arctan_series_direct: abs_tol must be > 0");
  // |term_m| = 2 / (9 m^2 - 1), decreasing.
  auto term = [](double m) { return 2.0 / (9.0 * m * m - 1.0); };
  Neumaier sum;
  double m = 1.0;
  for (;; m += 1.0) {
    const double sign = std::fmod(m, 2.0) == 1.0 ? 1.0 : -1.0;
    sum.add(sign * term(m));
    const double next = term(m + 1.0);
    if (0.5 * next < abs_tol) {
      const double partial = sum.value();
      const double following = partial - sign * next;
      AlternatingSum out;
      out.lower = std::min(partial, following);
      out.upper = std::max(partial, following);
      out.value = 0.5 * (partial + following);
      out.terms = static_cast<long long>(m) + 1;
      return out;
    }
  }
}

}  // namespace couponmax
