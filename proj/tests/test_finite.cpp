#include <doctest.h>

#include <cmath>

#include "couponmax/errors.hpp"
#include "couponmax/finite.hpp"
#include "couponmax/maxprob.hpp"
#include "couponmax/moments.hpp"
#include "couponmax/simulator.hpp"
#include "oracles.hpp"

using namespace couponmax;

namespace {

// P(D_2 > max(D_0, D_1)) for n = 3 by summing over the geometric laws.
// D_0 = 1, D_1 ~ G(2/3), D_2 ~ G(1/3); returns the strict-max probability
// of gap index 3 - m.
double discrete_n3(int m) {
  const double p1 = 2.0 / 3.0;
  const double p2 = 1.0 / 3.0;
  auto pmf = [](double p, int d) { return p * std::pow(1 - p, d - 1); };
  auto cdf = [](double p, int d) { return d <= 0 ? 0.0 : 1 - std::pow(1 - p, d); };
  double total = 0.0;
  for (int d = 1; d < 400; ++d) {
    if (m == 1) {
      // D_2 = d strictly above 1 and above D_1.
      if (d > 1) total += pmf(p2, d) * cdf(p1, d - 1);
    } else if (m == 2) {
      if (d > 1) total += pmf(p1, d) * cdf(p2, d - 1);
    }
  }
  return total;  // m == 3 is D_0 = 1, which is never a strict maximum
}

}  // namespace

TEST_SUITE("finite") {

TEST_CASE("moments of small systems") {
  // Default quadrature rel_tol is 1e-10.
  CHECK(finite_max_moment(1, 1) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(finite_max_moment(1, 3) == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(finite_max_moment(2, 1) == doctest::Approx(7.0 / 6.0).epsilon(1e-10));
  // E max(X, Y)^2 with X ~ Exp(1), Y ~ Exp(2), by inclusion-exclusion.
  CHECK(finite_max_moment(2, 2) == doctest::Approx(2.0 + 0.5 - 2.0 / 9.0).epsilon(1e-10));
  const QuadratureSpec tight{1e-16, 1e-14, 10000};
  CHECK(finite_max_moment(1, 3, tight) == doctest::Approx(6.0).epsilon(1e-13));
}

TEST_CASE("moments approach the limit") {
  CHECK(std::abs(100 * finite_max_moment(100, 1) - 100 * moment_series(1)) <= 1.0);
  for (int k : {1, 2}) {
    double prev = 1e300;
    for (int n : {50, 100, 200}) {
      const QuadratureSpec tight{1e-16, 1e-14, 10000};
      const double scaled =
          std::pow(n, k) * std::abs(finite_max_moment(n, k, tight) - moment_series(k));
      CAPTURE(k);
      CAPTURE(n);
      CHECK(scaled <= 1.0);
      CHECK(scaled <= prev + 1e-9);
      prev = scaled;
    }
  }
}

TEST_CASE("continuous argmax") {
  CHECK(finite_argmax_continuous(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(finite_argmax_continuous(1, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(finite_argmax_continuous(2, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(finite_argmax_continuous(1, 100) - argmax_probability(1)) <= 2.0 / 101);
  for (int n : {2, 5, 20}) {
    double sum = 0.0;
    for (int m = 1; m <= n; ++m) sum += finite_argmax_continuous(m, n);
    CAPTURE(n);
    CHECK(std::abs(sum - 1.0) < 1e-8);
  }
}

TEST_CASE("continuous argmax of the first gap against simulation") {
  SimConfig cfg;
  cfg.model = Model::continuous;
  cfg.n = 10;
  cfg.trials = 200000;
  cfg.seed = 11;
  cfg.k_max = 0;
  const auto s = simulate(cfg);
  const double p = finite_argmax_continuous(10, 10);
  const double se = std::sqrt(p * (1 - p) / cfg.trials);
  CHECK(std::abs(s.argmax_freq[9] - p) < 3 * se);
}

TEST_CASE("discrete argmax") {
  CHECK(discrete_argmax_probability(1, 2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(discrete_argmax_probability(2, 2) == 0.0);
  CHECK(discrete_argmax_probability(1, 1) == 1.0);
  for (int m = 1; m <= 3; ++m) {
    CAPTURE(m);
    CHECK(std::abs(discrete_argmax_probability(m, 3) - discrete_n3(m)) < 1e-11);
  }
  CHECK(std::abs(discrete_argmax_probability(1, 200) - argmax_probability(1)) < 0.02);
  for (int n : {2, 5, 20}) {
    double sum = 0.0;
    for (int m = 1; m <= n; ++m) sum += discrete_argmax_probability(m, n);
    CAPTURE(n);
    CHECK(sum <= 1.0);
    CHECK(sum >= 0.5 - 1e-11);
  }
}

TEST_CASE("expected total draws") {
  CHECK(expected_total_draws(1) == 1.0);
  CHECK(expected_total_draws(2) == 3.0);
  double h = 0.0;
  for (int i = 1; i <= 10; ++i) h += 1.0 / i;
  CHECK(expected_total_draws(10) == doctest::Approx(10 * h).epsilon(1e-15));
  CHECK(expected_total_draws(10) == doctest::Approx(29.28968).epsilon(1e-6));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(finite_max_moment(0, 1), RangeError);
  CHECK_THROWS_AS(finite_max_moment(kMaxFiniteN + 1, 1), RangeError);
  CHECK_THROWS_AS(finite_argmax_continuous(3, 2), RangeError);
  CHECK_THROWS_AS(discrete_argmax_probability(0, 2), RangeError);
  CHECK_THROWS_AS(discrete_argmax_probability(1, 2, 0.0), DomainError);
  CHECK_THROWS_AS(expected_total_draws(0), RangeError);
  FiniteModelParams ok{10, 3, 2};
  CHECK_NOTHROW(ok.validate());
  FiniteModelParams bad{10, 11, 2};
  CHECK_THROWS_AS(bad.validate(), RangeError);
}

}
