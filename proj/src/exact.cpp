#include "couponmax/exact.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "couponmax/errors.hpp"

namespace couponmax {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

Rational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  std::vector<Rational> out(coefficients_.size() + 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    out[i + 1] = coefficients_[i] / Rational(static_cast<long long>(i + 1));
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<Rational> out(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    out[i - 1] = coefficients_[i] * static_cast<long long>(i);
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator+(const RationalPolynomial& lhs,
                             const RationalPolynomial& rhs) {
  std::vector<Rational> out(
      std::max(lhs.coefficients_.size(), rhs.coefficients_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = lhs.coefficient(i) + rhs.coefficient(i);
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& lhs,
                             const RationalPolynomial& rhs) {
  return lhs + Rational(-1) * rhs;
}

RationalPolynomial operator*(const Rational& scale,
                             const RationalPolynomial& poly) {
  std::vector<Rational> out(poly.coefficients_);
  for (auto& c : out) c *= scale;
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c,
                                                std::size_t power) {
  std::vector<Rational> out(power + 1);
  out[power] = c;
  return RationalPolynomial(std::move(out));
}

BigInt factorial_exact(int n) {
  if (n < 0) throw RangeError("factorial of negative integer");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial_exact(int n, int k) {
  if (n < 0) throw RangeError("binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is C(n-k+i, i) after this step
  }
  return out;
}

namespace {

std::vector<Rational> build_bernoulli_table() {
  std::vector<Rational> b(kMaxBernoulliIndex + 1);
  b[0] = 1;
  for (int n = 1; n <= kMaxBernoulliIndex; ++n) {
    Rational acc = 0;
    for (int j = 0; j < n; ++j) {
      acc += Rational(binomial_exact(n + 1, j)) * b[j];
    }
    b[n] = -acc / Rational(n + 1);
  }
  return b;
}

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = build_bernoulli_table();
  return table;
}

std::vector<PQPair> build_pq_table(int j_max) {
  std::vector<PQPair> out;
  out.reserve(static_cast<std::size_t>(j_max));
  RationalPolynomial p(
      {Rational(0), Rational(1, 2), Rational(-1, 2)});
  for (int j = 1; j <= j_max; ++j) {
    RationalPolynomial q = p.antiderivative();
    RationalPolynomial next =
        q - RationalPolynomial::monomial(q(Rational(1)), 1);
    out.push_back({std::move(p), std::move(q)});
    p = std::move(next);
  }
  return out;
}

const std::vector<PQPair>& pq_table() {
  static const std::vector<PQPair> table =
      build_pq_table(kMaxBernoulliIndex - 1);
  return table;
}

}  // namespace

const Rational& bernoulli_exact(int n) {
  if (n < 0 || n > kMaxBernoulliIndex) {
    throw RangeError("Bernoulli index " + std::to_string(n) +
                     " outside [0, " + std::to_string(kMaxBernoulliIndex) +
                     "]");
  }
  return bernoulli_table()[static_cast<std::size_t>(n)];
}

std::vector<PQPair> pq_polynomials(int j_max) {
  if (j_max < 1 || j_max >= kMaxBernoulliIndex) {
    throw RangeError("pq_polynomials: j_max outside [1, " +
                     std::to_string(kMaxBernoulliIndex - 1) + "]");
  }
  const auto& table = pq_table();
  return {table.begin(), table.begin() + j_max};
}

const PQPair& pq_pair(int j) {
  if (j < 1 || j >= kMaxBernoulliIndex) {
    throw RangeError("p_j/q_j index " + std::to_string(j) + " outside [1, " +
                     std::to_string(kMaxBernoulliIndex - 1) + "]");
  }
  return pq_table()[static_cast<std::size_t>(j - 1)];
}

const Rational& qj_at_one(int j) {
  static const std::vector<Rational> values = [] {
    std::vector<Rational> v;
    for (const auto& pair : pq_table()) v.push_back(pair.q(Rational(1)));
    return v;
  }();
  if (j < 1 || j >= kMaxBernoulliIndex) {
    throw RangeError("q_j(1) index " + std::to_string(j) + " outside [1, " +
                     std::to_string(kMaxBernoulliIndex - 1) + "]");
  }
  return values[static_cast<std::size_t>(j - 1)];
}

}  // namespace couponmax
