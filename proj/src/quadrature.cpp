#include "couponmax/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "couponmax/errors.hpp"

namespace couponmax {

namespace {

// Kronrod abscissae on [-1, 1], x_k[1], x_k[3], x_k[5] are the Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
};

struct WorseFirst {
  bool operator()(const Segment& a, const Segment& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;
  }
};

double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integrand is not finite at x = " << x;
    throw DomainError(msg.str());
  }
  return y;
}

Segment gauss_kronrod(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = checked(f, center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double sum = checked(f, center - dx) + checked(f, center + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("quadrature abs_tol must be > 0");
  if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) {
    throw DomainError("quadrature rel_tol must lie in (0, 1e-6]");
  }
  if (max_subdivisions < 1 || max_subdivisions > 1'000'000) {
    throw DomainError("quadrature max_subdivisions must lie in [1, 1e6]");
  }
}

QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           const QuadratureSpec& spec,
                           std::span<const double> breakpoints) {
  spec.validate();
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw DomainError("integrate: need finite lo < hi");
  }

  std::vector<double> edges{lo};
  for (double b : breakpoints) {
    if (b > lo && b < hi) edges.push_back(b);
  }
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Segment, std::vector<Segment>, WorseFirst> queue;
  double total = 0.0;
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Segment s = gauss_kronrod(f, edges[i], edges[i + 1]);
    total += s.value;
    total_error += s.error;
    queue.push(s);
  }

  auto tolerance = [&] {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
  };

  int subdivisions = 0;
  bool exhausted = false;
  while (total_error > tolerance()) {
    if (subdivisions >= spec.max_subdivisions) {
      exhausted = true;
      break;
    }
    Segment worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      exhausted = true;  // interval can no longer be split in binary64
      break;
    }
    queue.pop();
    Segment left = gauss_kronrod(f, worst.lo, mid);
    Segment right = gauss_kronrod(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;

    if (subdivisions % 64 == 0) {
      // Re-sum to keep incremental updates from drifting.
      auto copy = queue;
      total = 0.0;
      total_error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_error += copy.top().error;
        copy.pop();
      }
    }
  }

  // Final sum over segments, ordered by position for reproducibility.
  std::vector<Segment> segments;
  segments.reserve(queue.size());
  while (!queue.empty()) {
    segments.push_back(queue.top());
    queue.pop();
  }
  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
  double value = 0.0;
  double compensation = 0.0;
  double error = 0.0;
  for (const auto& s : segments) {
    const double t = value + s.value;
    compensation += std::abs(value) >= std::abs(s.value)
                        ? (value - t) + s.value
                        : (s.value - t) + value;
    value = t;
    error += s.error;
  }
  value += compensation;

  if (exhausted && error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "integrate: tolerance not met after " << subdivisions
        << " subdivisions (estimate " << error << ")";
    throw ConvergenceError(msg.str(), value, error);
  }
  return {value, error, subdivisions};
}

double normal_cdf_complement(double z) {
  if (std::isnan(z)) return z;
  return 0.5 * std::erfc(z * 0.70710678118654752440084436210485);
}

}  // namespace couponmax
