#include <doctest.h>

#include "couponmax/errors.hpp"
#include "couponmax/exact.hpp"
#include "oracles.hpp"

using namespace couponmax;

TEST_SUITE("exact") {

TEST_CASE("bernoulli small indices") {
  CHECK(bernoulli_exact(0) == Rational(1));
  CHECK(bernoulli_exact(1) == Rational(-1, 2));
  CHECK(bernoulli_exact(2) == Rational(1, 6));
  CHECK(bernoulli_exact(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli matches Akiyama-Tanigawa up to the maximum index") {
  const auto ref = oracle::bernoulli_table(kMaxBernoulliIndex);
  for (int n = 0; n <= kMaxBernoulliIndex; ++n) {
    CAPTURE(n);
    CHECK(bernoulli_exact(n) == ref[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("odd bernoulli numbers vanish") {
  for (int n = 3; n <= 21; n += 2) CHECK(bernoulli_exact(n) == 0);
}

TEST_CASE("bernoulli index out of range") {
  CHECK_THROWS_AS(bernoulli_exact(-1), RangeError);
  CHECK_THROWS_AS(bernoulli_exact(kMaxBernoulliIndex + 1), RangeError);
}

TEST_CASE("first polynomial pair") {
  const auto pq = pq_polynomials(1);
  REQUIRE(pq.size() == 1);
  const RationalPolynomial p1({0, Rational(1, 2), Rational(-1, 2)});
  const RationalPolynomial q1({0, 0, Rational(1, 4), Rational(-1, 6)});
  CHECK(pq[0].p == p1);
  CHECK(pq[0].q == q1);
  CHECK(qj_at_one(1) == Rational(1, 12));
}

TEST_CASE("q_j(1) values") {
  CHECK(qj_at_one(2) == 0);
  CHECK(qj_at_one(3) == Rational(-1, 720));
  CHECK(qj_at_one(5) == Rational(1, 30240));
}

TEST_CASE("bernoulli from q_j(1)") {
  for (int n = 2; n <= 20; ++n) {
    CAPTURE(n);
    const Rational sign = (n % 2 == 0) ? 1 : -1;
    CHECK(bernoulli_exact(n) ==
          sign * qj_at_one(n - 1) * Rational(factorial_exact(n)));
  }
}

TEST_CASE("p_j and q_j shape") {
  for (int j = 1; j <= 12; ++j) {
    CAPTURE(j);
    const auto& pq = pq_pair(j);
    CHECK(pq.p.degree() == j + 1);
    CHECK(pq.p(Rational(0)) == 0);
    CHECK(pq.p(Rational(1)) == 0);
    CHECK(pq.q(Rational(0)) == 0);
    CHECK(pq.q.derivative() == pq.p);
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial_exact(0) == 1);
  CHECK(factorial_exact(20) == BigInt("2432902008176640000"));
  CHECK(binomial_exact(30, 15) == 155117520);
  CHECK(binomial_exact(5, 7) == 0);
  CHECK_THROWS_AS(factorial_exact(-1), RangeError);
}

TEST_CASE("polynomial arithmetic") {
  const auto x = RationalPolynomial::monomial(1, 1);
  const auto p = Rational(3) * x + RationalPolynomial::monomial(2, 2);
  CHECK(p.degree() == 2);
  CHECK(p(Rational(2)) == 14);
  CHECK((p - p).degree() == -1);
  CHECK(p.antiderivative().derivative() == p);
  CHECK(p.evaluate<double>(0.5) == doctest::Approx(2.0));
}

}
