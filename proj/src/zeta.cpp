#include "couponmax/zeta.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "couponmax/errors.hpp"

namespace couponmax {

namespace {

constexpr int kMaxCorrectionOrder = 12;

// sup_{[0,1]} |p_j| for j = 2 .. kMaxCorrectionOrder + 2, as a certified
// upper bound: grid maximum plus half a grid step times a derivative bound.
const std::array<double, kMaxCorrectionOrder + 3>& remainder_poly_bounds() {
  static const auto table = [] {
    std::array<double, kMaxCorrectionOrder + 3> out{};
    constexpr int kGrid = 4096;
    for (int j = 2; j <= kMaxCorrectionOrder + 2; ++j) {
      const auto& p = pq_pair(j).p;
      double lipschitz = 0.0;
      const auto coeffs = p.coefficients();
      for (std::size_t i = 1; i < coeffs.size(); ++i) {
        lipschitz += static_cast<double>(i) *
                     std::abs(coeffs[i].convert_to<double>());
      }
      double grid_max = 0.0;
      for (int g = 0; g <= kGrid; ++g) {
        const double x = static_cast<double>(g) / kGrid;
        grid_max = std::max(grid_max, std::abs(p.evaluate(x)));
      }
      out[static_cast<std::size_t>(j)] =
          (grid_max + lipschitz * 0.5 / kGrid) * (1.0 + 1e-12);
    }
    return out;
  }();
  return table;
}

template <class Real>
Real pochhammer(const Real& s, int n) {
  Real out = 1;
  for (int i = 0; i < n; ++i) out *= s + i;
  return out;
}

// Upper bound on zeta(sigma, b) for sigma > 1, b > 0.
double zeta_upper_bound(double sigma, double b) {
  return std::pow(b, -sigma) + std::pow(b, 1.0 - sigma) / (sigma - 1.0);
}

template <class Real>
struct ShiftedEstimate {
  Real value;
  double remainder_bound;
};

template <class Real>
ShiftedEstimate<Real> shifted_estimate(const Real& s, const Real& a, int shift,
                                       int order) {
  using std::pow;
  Real direct = 0;
  if (s > 0) {
    for (int n = shift - 1; n >= 0; --n) direct += pow(a + n, -s);
  } else {
    for (int n = 0; n < shift; ++n) direct += pow(a + n, -s);
  }

  const Real b = a + shift;
  Real tail = pow(b, 1 - s) / (s - 1) + pow(b, -s) / 2;
  Real rising = 1;
  for (int j = 1; j <= order + 1; ++j) {
    rising *= s + (j - 1);
    tail += rising * to_real<Real>(qj_at_one(j)) * pow(b, -s - j);
  }

  const Real coeff = pochhammer(s, order + 3);
  double bound = 0.0;
  if (coeff != 0) {
    const double sigma = static_cast<double>(s) + order + 3;
    if (sigma <= 1.0) {
      bound = std::numeric_limits<double>::infinity();
    } else {
      bound = std::abs(static_cast<double>(coeff)) *
              remainder_poly_bounds()[static_cast<std::size_t>(order + 2)] *
              zeta_upper_bound(sigma, static_cast<double>(b));
    }
  }
  return {direct + tail, bound};
}

template <class Real>
Real pi_as() {
  return boost::math::constants::pi<Real>();
}

}  // namespace

SpecialPoint::SpecialPoint(int p, int q) : p_(p), q_(q) {
  if (q != 2 && q != 3 && q != 4 && q != 6) {
    throw DomainError("special point denominator must be 2, 3, 4 or 6");
  }
  if (p <= 0 || p >= q || std::gcd(p, q) != 1) {
    throw DomainError("special point needs 0 < p < q with gcd(p, q) = 1");
  }
}

SpecialPoint SpecialPoint::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw DomainError("expected a fraction p/q, got '" + std::string(text) +
                      "'");
  }
  auto parse_int = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw DomainError("expected a fraction p/q, got '" + std::string(text) +
                        "'");
    }
    return v;
  };
  return SpecialPoint(parse_int(text.substr(0, slash)),
                      parse_int(text.substr(slash + 1)));
}

void ZetaEvalConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) {
    throw DomainError("zeta rel_tol must lie in (0, 1e-6]");
  }
  if (direct_terms < 8) throw DomainError("zeta direct_terms must be >= 8");
  if (correction_order < 0 || correction_order > kMaxCorrectionOrder) {
    throw DomainError("zeta correction_order must lie in [0, 12]");
  }
}

template <class Real>
Real zeta_even_as(int two_j) {
  if (two_j < 2 || two_j > kMaxBernoulliIndex || two_j % 2 != 0) {
    throw RangeError("zeta_even: argument must be even in [2, 64], got " +
                     std::to_string(two_j));
  }
  using boost::multiprecision::pow;
  const int j = two_j / 2;
  HighPrecision value = pow(pi_as<HighPrecision>(), two_j) *
                        pow(HighPrecision(2), two_j - 1) *
                        to_real<HighPrecision>(bernoulli_exact(two_j)) /
                        HighPrecision(factorial_exact(two_j));
  if (j % 2 == 0) value = -value;
  return static_cast<Real>(value);
}

template <class Real>
Real hurwitz_zeta_as(const Real& s, const Real& a, const ZetaEvalConfig& cfg) {
  cfg.validate();
  if (!(a > 0)) throw DomainError("hurwitz_zeta: a must be positive");
  using std::abs;
  if (abs(s - 1) < 1e-6) {
    throw DomainError("hurwitz_zeta: s is within 1e-6 of the pole at s = 1");
  }

  // For s <= 1 the function has real zeros, so the test there is relative to
  // max(|value|, 1).
  const bool continuation = !(s > 1);
  auto accepted = [&](const ShiftedEstimate<Real>& e) {
    double scale = std::abs(static_cast<double>(e.value));
    if (continuation) scale = std::max(scale, 1.0);
    return e.remainder_bound == 0.0 || e.remainder_bound <= cfg.rel_tol * scale;
  };

  if (s > 1) {
    auto e = shifted_estimate(s, a, cfg.direct_terms, cfg.correction_order);
    if (!accepted(e)) {
      throw ConvergenceError("hurwitz_zeta: remainder bound exceeds rel_tol",
                             static_cast<double>(e.value), e.remainder_bound);
    }
    return e.value;
  }

  // Continuation region: the direct terms grow with n, so use the smallest
  // shift whose remainder bound is acceptable.
  ShiftedEstimate<Real> e{};
  for (int shift = 0; shift <= cfg.direct_terms; ++shift) {
    e = shifted_estimate(s, a, shift, cfg.correction_order);
    if (accepted(e)) return e.value;
  }
  throw ConvergenceError("hurwitz_zeta: remainder bound exceeds rel_tol",
                         static_cast<double>(e.value), e.remainder_bound);
}

double hurwitz_zeta_neg(int k, double a) {
  if (k < 0 || k > 30) throw RangeError("hurwitz_zeta_neg: k must lie in [0, 30]");
  if (!(a > 0)) throw DomainError("hurwitz_zeta_neg: a must be positive");
  // Coefficients of a^0 .. a^{k+1}, exact.
  std::vector<Rational> coeff(static_cast<std::size_t>(k + 2));
  coeff[static_cast<std::size_t>(k + 1)] = Rational(-1, k + 1);
  coeff[static_cast<std::size_t>(k)] += Rational(1, 2);
  BigInt falling = 1;
  for (int j = 1; j <= k; ++j) {
    falling *= k - j + 1;
    Rational term = qj_at_one(j) * Rational(falling);
    if (j % 2 == 1) term = -term;
    coeff[static_cast<std::size_t>(k - j)] += term;
  }
  return RationalPolynomial(std::move(coeff)).evaluate(a);
}

template <class Real>
Real km_coefficient_as(int m, int q) {
  if (m < 1 || m > 16) throw RangeError("km_coefficient: m must lie in [1, 16]");
  if (q != 3 && q != 4 && q != 6) {
    throw RangeError("km_coefficient: q must be 3, 4 or 6");
  }
  const BigInt two_m_fact = factorial_exact(2 * m);
  Rational bracket(q, 2);
  BigInt q_pow = 1;
  for (int j = 0; j <= m; ++j) {
    bracket -= bernoulli_exact(2 * j) * Rational(two_m_fact * q_pow) /
               Rational(factorial_exact(2 * m - 2 * j + 1) *
                        factorial_exact(2 * j));
    q_pow *= q * q;
  }
  using boost::multiprecision::pow;
  HighPrecision prefactor = pow(2 * pi_as<HighPrecision>(), 2 * m + 1) /
                            (2 * HighPrecision(two_m_fact));
  if (m % 2 == 1) prefactor = -prefactor;
  return static_cast<Real>(prefactor * to_real<HighPrecision>(bracket));
}

template <class Real>
Real zeta_integer_as(int s, const ZetaEvalConfig& cfg) {
  if (s < 2) throw RangeError("zeta_integer: s must be >= 2");
  if (s % 2 == 0 && s <= kMaxBernoulliIndex) return zeta_even_as<Real>(s);
  return hurwitz_zeta_as<Real>(Real(s), Real(1), cfg);
}

template <class Real>
Real hurwitz_special_odd_as(int m, const SpecialPoint& point) {
  if (m < 1 || m > 16) {
    throw RangeError("hurwitz_special_odd: m must lie in [1, 16]");
  }
  using boost::multiprecision::pow;
  using std::sqrt;
  const int k = 2 * m + 1;
  const ZetaEvalConfig cfg = ZetaEvalConfig::high_precision();
  const HighPrecision zeta_k = zeta_integer_as<HighPrecision>(k, cfg);
  const HighPrecision two_k = pow(HighPrecision(2), k);
  const HighPrecision three_k = pow(HighPrecision(3), k);
  const HighPrecision root3 = sqrt(HighPrecision(3));
  const int sign = point.p() == 1 ? 1 : -1;

  HighPrecision out;
  switch (point.q()) {
    case 2:
      out = (two_k - 1) * zeta_k;
      break;
    case 3:
      out = (three_k - 1) / 2 * zeta_k +
            sign * km_coefficient_as<HighPrecision>(m, 3) / root3;
      break;
    case 4:
      out = pow(HighPrecision(2), 2 * m) * (two_k - 1) * zeta_k +
            sign * km_coefficient_as<HighPrecision>(m, 4) / 2;
      break;
    case 6:
      out = (two_k - 1) * (three_k - 1) / 2 * zeta_k +
            sign *
                (km_coefficient_as<HighPrecision>(m, 6) -
                 km_coefficient_as<HighPrecision>(m, 3)) /
                root3;
      break;
    default:
      throw DomainError("hurwitz_special_odd: invalid special point");
  }
  return static_cast<Real>(out);
}

double hurwitz_special_odd(int m, const SpecialPoint& point) {
  return hurwitz_special_odd_as<double>(m, point);
}

double hurwitz_half_even(int m) {
  if (m < 1 || 2 * m > kMaxBernoulliIndex) {
    throw RangeError("hurwitz_half_even: m must lie in [1, 32]");
  }
  using boost::multiprecision::pow;
  const HighPrecision z = zeta_even_as<HighPrecision>(2 * m);
  return static_cast<double>((pow(HighPrecision(2), 2 * m) - 1) * z);
}

double zeta_derivative_neg(int k, const QuadratureSpec& quad) {
  if (k < 0 || k > 10) {
    throw RangeError("zeta_derivative_neg: k must lie in [0, 10]");
  }
  double sum = -1.0 / ((k + 1.0) * (k + 1.0));
  double falling = 1.0;
  double harmonic_tail = 0.0;  // H_k - H_{k-j}
  for (int j = 1; j <= k; ++j) {
    falling *= k - j + 1;
    harmonic_tail += 1.0 / (k - j + 1);
    const double term = falling * qj_at_one(j).convert_to<double>() * harmonic_tail;
    sum += (j % 2 == 1) ? term : -term;
  }

  const auto& p = pq_pair(k + 1).p;
  const ZetaEvalConfig cfg;
  const auto integral = integrate(
      [&](double x) { return p.evaluate(x) * hurwitz_zeta(2.0, x + 1.0, cfg); },
      0.0, 1.0, quad);
  double k_fact = 1.0;
  for (int i = 2; i <= k; ++i) k_fact *= i;
  sum += (k % 2 == 0 ? k_fact : -k_fact) * integral.value;
  return sum;
}

template double zeta_even_as<double>(int);
template HighPrecision zeta_even_as<HighPrecision>(int);
template double hurwitz_zeta_as<double>(const double&, const double&,
                                        const ZetaEvalConfig&);
template HighPrecision hurwitz_zeta_as<HighPrecision>(const HighPrecision&,
                                                      const HighPrecision&,
                                                      const ZetaEvalConfig&);
template double km_coefficient_as<double>(int, int);
template HighPrecision km_coefficient_as<HighPrecision>(int, int);
template double zeta_integer_as<double>(int, const ZetaEvalConfig&);
template HighPrecision zeta_integer_as<HighPrecision>(int,
                                                      const ZetaEvalConfig&);
template double hurwitz_special_odd_as<double>(int, const SpecialPoint&);
template HighPrecision hurwitz_special_odd_as<HighPrecision>(
    int, const SpecialPoint&);

}  // namespace couponmax
