#include "couponmax/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "couponmax/errors.hpp"
#include "couponmax/finite.hpp"
#include "couponmax/moments.hpp"

namespace couponmax {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::int64_t kBlockSize = 4096;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  /// Uniform on the open interval (0, 1).
  double uniform() {
    state_ += kGolden;
    return (static_cast<double>(mix64(state_) >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Streaming mean / variance, combinable across blocks.
struct Accumulator {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void merge(const Accumulator& other) {
    if (other.count == 0.0) return;
    const double total = count + other.count;
    const double delta = other.mean - mean;
    mean += delta * other.count / total;
    m2 += other.m2 + delta * delta * count * other.count / total;
    count = total;
  }
};

struct BlockResult {
  std::vector<Accumulator> moments;
  std::vector<std::int64_t> strict;
  std::vector<std::int64_t> weak;
  std::int64_t ties = 0;
};

BlockResult run_block(const SimConfig& config, std::int64_t begin,
                      std::int64_t end) {
  const int n = config.n;
  const int m_max = config.tracked_m();
  BlockResult out;
  out.moments.resize(static_cast<std::size_t>(config.k_max));
  out.strict.assign(static_cast<std::size_t>(m_max), 0);
  out.weak.assign(static_cast<std::size_t>(m_max), 0);

  std::vector<double> gaps(static_cast<std::size_t>(n));
  for (std::int64_t trial = begin; trial < end; ++trial) {
    SplitMix64 rng(substream_seed(config.seed, static_cast<std::uint64_t>(trial)));
    for (int j = 0; j < n; ++j) {
      const double u = rng.uniform();
      if (config.model == Model::continuous) {
        // Exp(rate (n-j)/n) by inversion.
        gaps[static_cast<std::size_t>(j)] =
            -std::log(u) * n / static_cast<double>(n - j);
      } else if (j == 0) {
        gaps[0] = 1.0;  // success probability 1
      } else {
        // Geometric(p = (n-j)/n) on {1, 2, ...}; log(1-p) = log(j/n).
        gaps[static_cast<std::size_t>(j)] = std::max(
            1.0, std::ceil(std::log(u) / std::log(static_cast<double>(j) / n)));
      }
    }

    double best = gaps[0];
    int best_index = 0;
    int attained = 1;
    for (int j = 1; j < n; ++j) {
      const double g = gaps[static_cast<std::size_t>(j)];
      if (g > best) {
        best = g;
        best_index = j;
        attained = 1;
      } else if (g == best) {
        ++attained;
      }
    }

    if (attained == 1) {
      const int m = n - best_index;
      if (m <= m_max) ++out.strict[static_cast<std::size_t>(m - 1)];
    } else {
      ++out.ties;
    }
    for (int m = 1; m <= m_max; ++m) {
      if (gaps[static_cast<std::size_t>(n - m)] == best) {
        ++out.weak[static_cast<std::size_t>(m - 1)];
      }
    }

    const double scaled = best / n;
    double power = 1.0;
    for (int k = 1; k <= config.k_max; ++k) {
      power *= scaled;
      out.moments[static_cast<std::size_t>(k - 1)].add(power);
    }
  }
  return out;
}

}  // namespace

std::string to_string(Model model) {
  return model == Model::discrete ? "discrete" : "continuous";
}

Model parse_model(const std::string& text) {
  if (text == "discrete") return Model::discrete;
  if (text == "continuous") return Model::continuous;
  throw DomainError("model must be 'discrete' or 'continuous', got '" + text + "'");
}

void SimConfig::validate() const {
  if (n < 1) throw DomainError("simulate: n must be >= 1");
  if (trials < 1) throw DomainError("simulate: trials must be >= 1");
  if (k_max < 0 || k_max > 8) throw DomainError("simulate: k_max must lie in [0, 8]");
  const int m = tracked_m();
  if (m < 0 || m > n) throw DomainError("simulate: m_max must lie in [0, n]");
  if (static_cast<double>(trials) * n > work_budget) {
    throw ResourceError("simulate: trials * n exceeds the work budget");
  }
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) {
  return mix64(mix64(seed) ^ mix64(trial * kGolden + 0x632be59bd9b4e019ULL));
}

SimSummary simulate(const SimConfig& config) {
  config.validate();
  const std::int64_t blocks = (config.trials + kBlockSize - 1) / kBlockSize;
  std::vector<BlockResult> results(static_cast<std::size_t>(blocks));

  unsigned workers = config.threads != 0 ? config.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::int64_t>(workers, blocks));
  auto work = [&](unsigned worker) {
    for (std::int64_t b = worker; b < blocks; b += workers) {
      const std::int64_t begin = b * kBlockSize;
      const std::int64_t end = std::min(config.trials, begin + kBlockSize);
      results[static_cast<std::size_t>(b)] = run_block(config, begin, end);
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  const int m_max = config.tracked_m();
  std::vector<Accumulator> moments(static_cast<std::size_t>(config.k_max));
  std::vector<std::int64_t> strict(static_cast<std::size_t>(m_max), 0);
  std::vector<std::int64_t> weak(static_cast<std::size_t>(m_max), 0);
  std::int64_t ties = 0;
  for (const auto& block : results) {
    for (std::size_t k = 0; k < moments.size(); ++k) moments[k].merge(block.moments[k]);
    for (std::size_t m = 0; m < strict.size(); ++m) {
      strict[m] += block.strict[m];
      weak[m] += block.weak[m];
    }
    ties += block.ties;
  }

  SimSummary summary;
  summary.model = config.model;
  summary.n = config.n;
  summary.trials = config.trials;
  summary.seed = config.seed;
  summary.k_max = config.k_max;
  summary.m_max = m_max;
  const double trials = static_cast<double>(config.trials);
  for (int k = 1; k <= config.k_max; ++k) {
    const auto& acc = moments[static_cast<std::size_t>(k - 1)];
    const double variance = config.trials > 1 ? acc.m2 / (trials - 1.0) : 0.0;
    summary.moments.push_back({k, acc.mean, std::sqrt(variance / trials)});
  }
  for (int m = 0; m < m_max; ++m) {
    summary.argmax_freq.push_back(static_cast<double>(strict[static_cast<std::size_t>(m)]) / trials);
    summary.weak_argmax_freq.push_back(static_cast<double>(weak[static_cast<std::size_t>(m)]) / trials);
  }
  summary.tie_count = ties;
  summary.tie_rate = static_cast<double>(ties) / trials;
  return summary;
}

ComparisonReport compare_with_theory(const SimSummary& summary,
                                     const SimConfig& config,
                                     const QuadratureSpec& spec) {
  if (summary.model != config.model || summary.n != config.n ||
      summary.trials != config.trials || summary.seed != config.seed ||
      summary.k_max != config.k_max || summary.m_max != config.tracked_m()) {
    throw DomainError("compare_with_theory: summary does not match config");
  }
  const double trials = static_cast<double>(summary.trials);
  ComparisonReport report;
  auto add = [&](std::string quantity, int index, double empirical,
                 double theory, double se) {
    double z = 0.0;
    if (se > 0.0) {
      z = (empirical - theory) / se;
    } else if (empirical != theory) {
      z = std::numeric_limits<double>::infinity();
    }
    const bool flagged = std::abs(z) > kFlagThreshold;
    report.any_flagged = report.any_flagged || flagged;
    report.entries.push_back({std::move(quantity), index, empirical, theory, se, z, flagged});
  };

  for (const auto& est : summary.moments) {
    if (summary.model == Model::continuous) {
      add("moment_finite", est.k, est.mean,
          finite_max_moment(summary.n, est.k, spec), est.standard_error);
    }
    add("moment_limit", est.k, est.mean, moment_series(est.k), est.standard_error);
  }
  for (int m = 1; m <= summary.m_max; ++m) {
    const double theory = summary.model == Model::continuous
                              ? finite_argmax_continuous(m, summary.n, spec)
                              : discrete_argmax_probability(m, summary.n);
    const double empirical = summary.argmax_freq[static_cast<std::size_t>(m - 1)];
    double p = theory;
    if (!(p > 0.0 && p < 1.0)) p = empirical;
    const double se = std::sqrt(std::max(0.0, p * (1.0 - p)) / trials);
    add("argmax", m, empirical, theory, se);
  }
  return report;
}

}  // namespace couponmax
