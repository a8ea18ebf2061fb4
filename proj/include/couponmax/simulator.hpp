#pragma once

// Seeded Monte Carlo for the discrete and continuous coupon collector models.
//
// Trial t draws from its own substream, seeded by mixing (seed, t), and trials
// are reduced in fixed-size blocks combined in block order, so a summary
// depends only on the configuration and never on thread count or scheduling.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "couponmax/quadrature.hpp"

namespace couponmax {

enum class Model { discrete, continuous };

std::string to_string(Model model);
/// Accepts "discrete" or "continuous"; throws DomainError otherwise.
Model parse_model(const std::string& text);

struct SimConfig {
  Model model = Model::continuous;
  int n = 1;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  int k_max = 4;
  /// Largest offset m whose argmax frequency is tracked; defaults to n.
  std::optional<int> m_max;
  /// Upper bound on trials * n.
  double work_budget = 2e10;
  /// 0 means one worker per hardware thread.
  unsigned threads = 0;

  int tracked_m() const { return m_max.value_or(n); }
  /// Throws DomainError for invalid fields, ResourceError over budget.
  void validate() const;
};

struct MomentEstimate {
  int k = 0;
  double mean = 0.0;            // empirical mean of (max / n)^k
  double standard_error = 0.0;

  friend bool operator==(const MomentEstimate&, const MomentEstimate&) = default;
};

struct SimSummary {
  Model model = Model::continuous;
  int n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int k_max = 0;
  int m_max = 0;
  std::vector<MomentEstimate> moments;
  /// argmax_freq[m-1]: fraction of trials where gap n-m is the strict maximum.
  std::vector<double> argmax_freq;
  /// weak_argmax_freq[m-1]: fraction of trials where gap n-m attains the max.
  std::vector<double> weak_argmax_freq;
  /// Fraction of trials whose maximum is attained by more than one gap.
  double tie_rate = 0.0;
  std::int64_t tie_count = 0;

  friend bool operator==(const SimSummary&, const SimSummary&) = default;
};

/// Deterministic per-trial seed derived from (seed, trial).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial);

SimSummary simulate(const SimConfig& config);

struct ComparisonEntry {
  std::string quantity;  // "moment_finite", "moment_limit", "argmax"
  int index = 0;         // k for moments, m for argmax
  double empirical = 0.0;
  double theory = 0.0;
  double standard_error = 0.0;
  double z = 0.0;
  bool flagged = false;  // |z| > kFlagThreshold
};

inline constexpr double kFlagThreshold = 4.0;

struct ComparisonReport {
  std::vector<ComparisonEntry> entries;
  bool any_flagged = false;
};

/// z-scores of a summary against the finite-n and limiting theory. Throws
/// DomainError if the summary was not produced from `config`.
ComparisonReport compare_with_theory(const SimSummary& summary,
                                     const SimConfig& config,
                                     const QuadratureSpec& spec = {});

}  // namespace couponmax
