#pragma once

// Exact rational arithmetic: Bernoulli numbers and the p_j / q_j polynomial
// family built by repeated integration starting from p_1(x) = (x - x^2)/2.

#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace couponmax {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 50 decimal digits; used wherever closed forms cancel catastrophically.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Largest Bernoulli index served; q_j(1) is available for j < this.
inline constexpr int kMaxBernoulliIndex = 64;

template <class Real>
Real to_real(const Rational& r) {
  if constexpr (std::is_same_v<Real, double>) {
    return r.convert_to<double>();
  } else {
    return Real(boost::multiprecision::numerator(r)) /
           Real(boost::multiprecision::denominator(r));
  }
}

/// Polynomial with exact rational coefficients; coefficient i multiplies x^i.
/// Trailing zero coefficients are stripped, so the zero polynomial is empty.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  /// -1 for the zero polynomial.
  int degree() const noexcept {
    return static_cast<int>(coefficients_.size()) - 1;
  }
  bool is_zero() const noexcept { return coefficients_.empty(); }

  std::span<const Rational> coefficients() const noexcept {
    return coefficients_;
  }
  /// Zero beyond the degree.
  Rational coefficient(std::size_t i) const;

  Rational operator()(const Rational& x) const;

  template <class Real>
  Real evaluate(const Real& x) const {
    Real acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc = acc * x + to_real<Real>(*it);
    }
    return acc;
  }

  /// Antiderivative vanishing at 0.
  RationalPolynomial antiderivative() const;
  RationalPolynomial derivative() const;

  friend RationalPolynomial operator+(const RationalPolynomial& lhs,
                                      const RationalPolynomial& rhs);
  friend RationalPolynomial operator-(const RationalPolynomial& lhs,
                                      const RationalPolynomial& rhs);
  friend RationalPolynomial operator*(const Rational& scale,
                                      const RationalPolynomial& poly);
  friend bool operator==(const RationalPolynomial&,
                         const RationalPolynomial&) = default;

  /// The monomial c * x^power.
  static RationalPolynomial monomial(const Rational& c, std::size_t power);

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

struct PQPair {
  RationalPolynomial p;
  RationalPolynomial q;
};

/// n! exactly. Throws RangeError for n < 0.
BigInt factorial_exact(int n);

/// C(n, k) exactly; zero outside 0 <= k <= n. Throws RangeError for n < 0.
BigInt binomial_exact(int n, int k);

/// B_n with the B_1 = -1/2 convention, from sum_{j<=n} C(n+1, j) B_j = 0.
/// The table for 0..kMaxBernoulliIndex is built once on first use.
/// Throws RangeError outside [0, kMaxBernoulliIndex].
const Rational& bernoulli_exact(int n);

/// (p_j, q_j) for j = 1..j_max, with q_j = \int_0^x p_j and
/// p_{j+1}(x) = q_j(x) - x q_j(1).
std::vector<PQPair> pq_polynomials(int j_max);

/// Cached (p_j, q_j) for 1 <= j < kMaxBernoulliIndex.
const PQPair& pq_pair(int j);

/// q_j(1). Equals (-1)^{j+1} B_{j+1} / (j+1)!.
const Rational& qj_at_one(int j);

}  // namespace couponmax
