#include "couponmax/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "couponmax/errors.hpp"
#include "couponmax/exact.hpp"
#include "couponmax/finite.hpp"
#include "couponmax/partition.hpp"
#include "couponmax/simulator.hpp"
#include "couponmax/zeta.hpp"

namespace couponmax::cli {

namespace {

using Json = nlohmann::ordered_json;

Json cell_to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return v;
        }
      },
      cell);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_field(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return csv_escape(v);
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

void write_indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(2 * depth), ' '); }

// nlohmann's dump prints the shortest round-trip form; the envelope contract
// is a fixed 17-digit form, so numbers are written here.
void write_json(const Json& j, std::string& out, int depth) {
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        write_indent(out, depth + 1);
        out += Json(it.key()).dump();
        out += ": ";
        write_json(it.value(), out, depth + 1);
      }
      out += '\n';
      write_indent(out, depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i != 0) out += ",\n";
        write_indent(out, depth + 1);
        write_json(j[i], out, depth + 1);
      }
      out += '\n';
      write_indent(out, depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

Json pairs_to_json(const std::vector<std::pair<std::string, Cell>>& pairs) {
  Json obj = Json::object();
  for (const auto& [key, value] : pairs) obj[key] = cell_to_json(value);
  return obj;
}

struct Context {
  Format format = Format::json;
  std::optional<double> rel_tol;
  bool timing = false;

  QuadratureSpec quad() const {
    QuadratureSpec spec;
    if (rel_tol) spec.rel_tol = *rel_tol;
    spec.validate();
    return spec;
  }

  ZetaEvalConfig zeta() const {
    ZetaEvalConfig cfg;
    if (rel_tol) cfg.rel_tol = *rel_tol;
    cfg.validate();
    return cfg;
  }
};

struct CommandOutput {
  Table table;
  EnvelopeHeader header;
};

std::vector<std::pair<std::string, Cell>> tolerance_meta(const Context& ctx) {
  const QuadratureSpec q = ctx.quad();
  return {{"tool_version", std::string(kToolVersion)},
          {"quadrature_abs_tol", q.abs_tol},
          {"quadrature_rel_tol", q.rel_tol},
          {"zeta_rel_tol", ctx.rel_tol.value_or(ZetaEvalConfig{}.rel_tol)}};
}

Table moments_table(int k, const std::string& method) {
  if (method == "all") return to_table(std::vector<MomentReport>{moment_report(k)});
  double value = 0.0;
  if (method == "series") {
    value = moment_series(k);
  } else if (method == "hurwitz") {
    value = moment_hurwitz(k);
  } else {
    value = moment_bernoulli(k);
  }
  return {{"k", "method", "value"}, {{std::int64_t{k}, method, value}}};
}

Table partition_table(int m) {
  const BigInt p = partition_count(m);
  // Log-space ratio: both sides overflow a double well inside the valid range.
  const double log_asym = std::numbers::pi * std::sqrt(2.0 * m / 3.0) - std::log(4.0 * m * std::sqrt(3.0));
  const double log_p = static_cast<double>(boost::multiprecision::log(HighPrecision(p)));
  return {{"m", "p", "asymptotic", "asymptotic_ratio"},
          {{std::int64_t{m}, p.str(), partition_asymptotic(m), std::exp(log_asym - log_p)}}};
}

Table simulate_table(const SimConfig& config, bool compare, const QuadratureSpec& spec) {
  const SimSummary summary = simulate(config);
  const double trials = static_cast<double>(summary.trials);
  auto binomial_se = [&](double f) { return std::sqrt(f * (1.0 - f) / trials); };

  Table t{{"quantity", "index", "empirical", "standard_error", "theory", "z", "flagged"}, {}};
  if (compare) {
    for (const auto& e : compare_with_theory(summary, config, spec).entries) {
      t.rows.push_back({e.quantity, std::int64_t{e.index}, e.empirical, e.standard_error,
                        e.theory, e.z, e.flagged});
    }
  } else {
    for (const auto& est : summary.moments) {
      t.rows.push_back({std::string("moment"), std::int64_t{est.k}, est.mean,
                        est.standard_error, {}, {}, {}});
    }
    for (int m = 1; m <= summary.m_max; ++m) {
      const double f = summary.argmax_freq[static_cast<std::size_t>(m - 1)];
      t.rows.push_back({std::string("argmax"), std::int64_t{m}, f, binomial_se(f), {}, {}, {}});
    }
  }
  for (int m = 1; m <= summary.m_max; ++m) {
    const double f = summary.weak_argmax_freq[static_cast<std::size_t>(m - 1)];
    t.rows.push_back({std::string("weak_argmax"), std::int64_t{m}, f, binomial_se(f), {}, {}, {}});
  }
  t.rows.push_back({std::string("tie_rate"), {}, summary.tie_rate,
                    binomial_se(summary.tie_rate), {}, {}, {}});
  return t;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

Table to_table(const std::vector<ArgmaxRow>& rows) {
  Table t{{"m", "exact", "asymptotic", "hr_integral"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({std::int64_t{r.m}, r.exact, r.asymptotic, r.hr_integral});
  }
  return t;
}

Table to_table(const std::vector<MomentReport>& rows) {
  Table t{{"k", "via_series", "via_hurwitz", "via_bernoulli", "max_rel_disagreement"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({std::int64_t{r.k}, r.via_series, r.via_hurwitz, r.via_bernoulli,
                      r.max_rel_disagreement});
  }
  return t;
}

std::string render_table(const Table& table, Format format, const EnvelopeHeader& header) {
  if (format == Format::csv) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i != 0) out += ',';
      out += csv_escape(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i != 0) out += ',';
        out += csv_field(row[i]);
      }
      out += '\n';
    }
    return out;
  }

  Json doc = Json::object();
  doc["command"] = header.command;
  doc["params"] = pairs_to_json(header.params);
  Json results = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      obj[table.columns[i]] = cell_to_json(row[i]);
    }
    results.push_back(std::move(obj));
  }
  doc["results"] = std::move(results);
  doc["meta"] = pairs_to_json(header.meta);
  std::string out;
  write_json(doc, out, 0);
  out += '\n';
  return out;
}

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Extreme-value quantities of the coupon collector problem", "couponmax"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Context ctx;
  std::string format_text = "json";
  double rel_tol = 0.0;
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* rel_tol_opt = app.add_option("--rel-tol", rel_tol, "Relative tolerance for quadrature and zeta")
                          ->check(CLI::PositiveNumber);
  app.add_flag("--timing", ctx.timing, "Include wall time in the metadata");

  auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  int k = 0;
  std::string method = "all";
  auto* moments_cmd = sub(&app, "moments", "Moment E(M^k) of the limiting maximum");
  moments_cmd->add_option("--k", k)->required()->check(CLI::Range(1, kMaxMomentOrder));
  moments_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"all", "hurwitz", "bernoulli", "series"}));

  int kmax = 0;
  auto* table2_cmd = sub(&app, "table2", "Moments for k = 1..kmax by all three routes");
  table2_cmd->add_option("--kmax", kmax)->required()->check(CLI::Range(1, kMaxMomentOrder));

  auto* zeta_cmd = sub(&app, "zeta", "Hurwitz zeta evaluation");
  zeta_cmd->require_subcommand(1);
  int zeta_m = 0;
  std::string point_text;
  auto* special_cmd = sub(zeta_cmd, "special", "Closed form of zeta(2m+1, p/q)");
  special_cmd->add_option("--m", zeta_m)->required()->check(CLI::Range(1, 16));
  special_cmd->add_option("--a", point_text, "p/q with q in {2,3,4,6}")->required();
  double zeta_s = 0.0;
  double zeta_a = 0.0;
  auto* eval_cmd = sub(zeta_cmd, "eval", "Numerical zeta(s, a)");
  eval_cmd->add_option("--s", zeta_s)->required();
  eval_cmd->add_option("--a", zeta_a)->required();

  int maxprob_m = 0;
  std::vector<std::string> columns{"exact", "asymptotic", "hr"};
  auto* maxprob_cmd = sub(&app, "maxprob", "Probability that X_m is the maximum");
  maxprob_cmd->add_option("--m", maxprob_m)->required()->check(CLI::Range(1, kMaxArgmaxIndex));
  maxprob_cmd->add_option("--columns", columns)
      ->delimiter(',')
      ->check(CLI::IsMember({"exact", "asymptotic", "hr"}));

  std::vector<int> rows;
  auto* table1_cmd = sub(&app, "table1", "Argmax probabilities for a list of m");
  table1_cmd->add_option("--rows", rows)->required()->delimiter(',')
      ->check(CLI::Range(1, kMaxArgmaxIndex));

  int partition_m = 0;
  auto* partition_cmd = sub(&app, "partition", "Partition number p(m)");
  partition_cmd->add_option("--m", partition_m)->required()
      ->check(CLI::Range(0, kMaxPartitionArgument));

  auto* finite_cmd = sub(&app, "finite", "Finite-n models");
  finite_cmd->require_subcommand(1);
  int finite_n = 0;
  int finite_k = 0;
  int finite_m = 0;
  std::string model_text;
  auto* max_moment_cmd = sub(finite_cmd, "max-moment", "E((max W / n)^k) in the continuous model");
  max_moment_cmd->add_option("--n", finite_n)->required();
  max_moment_cmd->add_option("--k", finite_k)->required();
  auto* argmax_cmd = sub(finite_cmd, "argmax", "Probability that gap n-m is the strict maximum");
  argmax_cmd->add_option("--model", model_text)->required()
      ->check(CLI::IsMember({"continuous", "discrete"}));
  argmax_cmd->add_option("--n", finite_n)->required();
  argmax_cmd->add_option("--m", finite_m)->required();
  auto* total_cmd = sub(finite_cmd, "total-draws", "Expected number of draws n H_n");
  total_cmd->add_option("--n", finite_n)->required();

  SimConfig sim;
  std::string sim_model;
  int sim_mmax = -1;
  bool compare = false;
  auto* simulate_cmd = sub(&app, "simulate", "Monte Carlo for the finite models");
  simulate_cmd->add_option("--model", sim_model)->required()
      ->check(CLI::IsMember({"continuous", "discrete"}));
  simulate_cmd->add_option("--n", sim.n)->required();
  simulate_cmd->add_option("--trials", sim.trials)->required();
  simulate_cmd->add_option("--seed", sim.seed)->required();
  simulate_cmd->add_option("--kmax", sim.k_max)->capture_default_str();
  simulate_cmd->add_option("--mmax", sim_mmax, "Defaults to n");
  simulate_cmd->add_option("--threads", sim.threads, "0 uses every hardware thread")
      ->capture_default_str();
  simulate_cmd->add_flag("--compare", compare, "Add theory values and z-scores");

  std::vector<std::string> argv_store{"couponmax"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  RunResult result;
  std::ostringstream out;
  std::ostringstream err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return result;
  }
  ctx.format = format_text == "csv" ? Format::csv : Format::json;
  if (rel_tol_opt->count() > 0) ctx.rel_tol = rel_tol;

  const auto start = std::chrono::steady_clock::now();
  CommandOutput cmd;
  std::vector<std::pair<std::string, Cell>> extra_meta;
  auto& params = cmd.header.params;

  try {
    if (*moments_cmd) {
      cmd.header.command = "moments";
      params = {{"k", std::int64_t{k}}, {"method", method}};
      cmd.table = moments_table(k, method);
    } else if (*table2_cmd) {
      cmd.header.command = "table2";
      params = {{"kmax", std::int64_t{kmax}}};
      std::vector<MomentReport> reports;
      for (int j = 1; j <= kmax; ++j) reports.push_back(moment_report(j));
      cmd.table = to_table(reports);
    } else if (*special_cmd) {
      cmd.header.command = "zeta special";
      const SpecialPoint point = SpecialPoint::parse(point_text);
      params = {{"m", std::int64_t{zeta_m}}, {"a", point_text}};
      cmd.table = {{"m", "a", "s", "value", "km_coefficient"},
                   {{std::int64_t{zeta_m}, point_text, std::int64_t{2 * zeta_m + 1},
                     hurwitz_special_odd(zeta_m, point),
                     point.q() == 2 ? Cell{} : Cell{km_coefficient(zeta_m, point.q())}}}};
    } else if (*eval_cmd) {
      cmd.header.command = "zeta eval";
      params = {{"s", zeta_s}, {"a", zeta_a}};
      cmd.table = {{"s", "a", "value"}, {{zeta_s, zeta_a, hurwitz_zeta(zeta_s, zeta_a, ctx.zeta())}}};
    } else if (*maxprob_cmd) {
      cmd.header.command = "maxprob";
      std::string joined;
      for (const auto& c : columns) joined += (joined.empty() ? "" : ",") + c;
      params = {{"m", std::int64_t{maxprob_m}}, {"columns", joined}};
      const QuadratureSpec spec = ctx.quad();
      cmd.table.columns.push_back("m");
      std::vector<Cell> row{std::int64_t{maxprob_m}};
      for (const auto& c : columns) {
        if (c == "exact") {
          cmd.table.columns.push_back("exact");
          row.emplace_back(argmax_probability(maxprob_m, spec));
        } else if (c == "asymptotic") {
          cmd.table.columns.push_back("asymptotic");
          row.emplace_back(argmax_asymptotic(maxprob_m));
        } else {
          cmd.table.columns.push_back("hr_integral");
          row.emplace_back(hr_integral(maxprob_m, spec));
        }
      }
      cmd.table.rows.push_back(std::move(row));
    } else if (*table1_cmd) {
      cmd.header.command = "table1";
      std::string joined;
      for (int r : rows) joined += (joined.empty() ? "" : ",") + std::to_string(r);
      params = {{"rows", joined}};
      cmd.table = to_table(table1(rows, ctx.quad()));
    } else if (*partition_cmd) {
      cmd.header.command = "partition";
      params = {{"m", std::int64_t{partition_m}}};
      cmd.table = partition_table(partition_m);
    } else if (*max_moment_cmd) {
      cmd.header.command = "finite max-moment";
      params = {{"n", std::int64_t{finite_n}}, {"k", std::int64_t{finite_k}}};
      cmd.table = {{"n", "k", "value"},
                   {{std::int64_t{finite_n}, std::int64_t{finite_k},
                     finite_max_moment(finite_n, finite_k, ctx.quad())}}};
    } else if (*argmax_cmd) {
      cmd.header.command = "finite argmax";
      params = {{"model", model_text}, {"n", std::int64_t{finite_n}}, {"m", std::int64_t{finite_m}}};
      const double value = parse_model(model_text) == Model::continuous
                               ? finite_argmax_continuous(finite_m, finite_n, ctx.quad())
                               : discrete_argmax_probability(finite_m, finite_n);
      cmd.table = {{"model", "n", "m", "value"},
                   {{model_text, std::int64_t{finite_n}, std::int64_t{finite_m}, value}}};
    } else if (*total_cmd) {
      cmd.header.command = "finite total-draws";
      params = {{"n", std::int64_t{finite_n}}};
      cmd.table = {{"n", "value"}, {{std::int64_t{finite_n}, expected_total_draws(finite_n)}}};
    } else if (*simulate_cmd) {
      cmd.header.command = "simulate";
      sim.model = parse_model(sim_model);
      if (sim_mmax >= 0) sim.m_max = sim_mmax;
      params = {{"model", sim_model},
                {"n", std::int64_t{sim.n}},
                {"trials", std::int64_t{sim.trials}},
                {"seed", std::uint64_t{sim.seed}},
                {"kmax", std::int64_t{sim.k_max}},
                {"mmax", std::int64_t{sim.tracked_m()}},
                {"compare", compare}};
      extra_meta.emplace_back("seed", std::uint64_t{sim.seed});
      cmd.table = simulate_table(sim, compare, ctx.quad());
    }
    extra_meta.emplace_back("status", std::string("ok"));
    result.exit_code = kExitOk;
  } catch (const ConvergenceError& e) {
    cmd.table = {{"value", "error_estimate", "converged"},
                 {{e.partial_value(), e.error_estimate(), false}}};
    extra_meta.emplace_back("status", std::string("convergence_error"));
    extra_meta.emplace_back("message", std::string(e.what()));
    err << "convergence error: " << e.what() << '\n';
    result.exit_code = kExitConvergence;
  } catch (const std::exception& e) {
    // DomainError, RangeError, ResourceError and argument errors.
    result.err = std::string("error: ") + e.what() + '\n';
    result.exit_code = kExitUsage;
    return result;
  }

  try {
    cmd.header.meta = tolerance_meta(ctx);
  } catch (const std::exception& e) {
    result.err = std::string("error: ") + e.what() + '\n';
    result.exit_code = kExitUsage;
    return result;
  }
  for (auto& m : extra_meta) cmd.header.meta.push_back(std::move(m));
  if (ctx.timing) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    cmd.header.meta.emplace_back("wall_time_s", elapsed);
  }
  out << render_table(cmd.table, ctx.format, cmd.header);
  result.out = out.str();
  result.err += err.str();
  return result;
}

}  // namespace couponmax::cli
