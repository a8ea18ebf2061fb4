#include <doctest.h>

#include <charconv>
#include <cmath>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "couponmax/cli.hpp"
#include "couponmax/maxprob.hpp"
#include "couponmax/moments.hpp"
#include "couponmax/zeta.hpp"

using namespace couponmax;
using couponmax::cli::run;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(res.ec == std::errc());
  REQUIRE(res.ptr == s.data() + s.size());
  return v;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("render empty table") {
  cli::Table t{{"m", "exact"}, {}};
  CHECK(cli::render_table(t, cli::Format::csv) == "m,exact\n");
}

TEST_CASE("render one argmax row as json") {
  const auto t = cli::to_table(std::vector<ArgmaxRow>{{1, 0.5, 0.25, 0.125}});
  const auto doc = nlohmann::json::parse(cli::render_table(t, cli::Format::json, {"table1", {}, {}}));
  REQUIRE(doc["results"].is_array());
  CHECK(doc["results"].size() == 1);
  CHECK(doc["results"][0]["m"] == 1);
  CHECK(doc["results"][0]["hr_integral"] == 0.125);
  CHECK(doc["command"] == "table1");
}

TEST_CASE("moment table schema") {
  const auto t = cli::to_table(std::vector<MomentReport>{moment_report(1)});
  const auto rows = parse_csv(cli::render_table(t, cli::Format::csv));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"k", "via_series", "via_hurwitz", "via_bernoulli",
                                            "max_rel_disagreement"});
}

TEST_CASE("seventeen digits round trip") {
  for (double v : {0.1, 1.0 / 3.0, 2.0 / 3.0, 1e-300, 123456789.123456789, -4.9e-324, 6.02e23}) {
    CHECK(same_bits(parse_double(cli::format_double(v)), v));
  }
  CHECK(cli::format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("table2 csv") {
  const auto r = run({"table2", "--kmax", "5", "--format", "csv"});
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 6);
  const double printed[] = {1.255, 2.397, 6.689, 25.453, 123.705};
  for (int k = 1; k <= 5; ++k) {
    const auto& row = rows[static_cast<std::size_t>(k)];
    CHECK(row[0] == std::to_string(k));
    for (int c = 1; c <= 3; ++c) {
      const double v = parse_double(row[static_cast<std::size_t>(c)]);
      CHECK(std::abs(std::round(v * 1000) / 1000 - printed[k - 1]) < 5e-4);
    }
    // The csv text re-parses to exactly the library value.
    CHECK(same_bits(parse_double(row[1]), moment_series(k)));
  }
}

TEST_CASE("table1 csv re-parses exactly") {
  const auto r = run({"--format", "csv", "table1", "--rows", "1,2,3"});
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  for (int m = 1; m <= 3; ++m) {
    CHECK(same_bits(parse_double(rows[static_cast<std::size_t>(m)][1]), argmax_probability(m)));
    CHECK(same_bits(parse_double(rows[static_cast<std::size_t>(m)][2]), argmax_asymptotic(m)));
  }
}

TEST_CASE("zeta special") {
  const auto r = run({"zeta", "special", "--m", "1", "--a", "1/2"});
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["results"][0]["value"].get<double>() ==
        doctest::Approx(7 * zeta_integer(3)).epsilon(1e-15));
  CHECK(doc["results"][0]["km_coefficient"].is_null());
  CHECK(doc["params"]["a"] == "1/2");
  CHECK(run({"zeta", "special", "--m", "1", "--a", "2/4"}).exit_code == 2);
  CHECK(run({"zeta", "special", "--m", "1", "--a", "0.5"}).exit_code == 2);
}

TEST_CASE("every command runs") {
  const std::vector<std::vector<std::string>> commands{
      {"moments", "--k", "3"},
      {"moments", "--k", "3", "--method", "bernoulli"},
      {"zeta", "eval", "--s", "2.5", "--a", "0.75"},
      {"maxprob", "--m", "7", "--columns", "exact,hr"},
      {"partition", "--m", "1000"},
      {"finite", "max-moment", "--n", "20", "--k", "2"},
      {"finite", "argmax", "--model", "discrete", "--n", "20", "--m", "3"},
      {"finite", "argmax", "--model", "continuous", "--n", "20", "--m", "3"},
      {"finite", "total-draws", "--n", "20"},
      {"simulate", "--model", "continuous", "--n", "10", "--trials", "1000", "--seed", "5",
       "--compare"},
  };
  for (const auto& argv : commands) {
    const auto r = run(argv);
    CAPTURE(argv[0]);
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::accept(r.out));
  }
  const auto p = nlohmann::json::parse(run({"partition", "--m", "100"}).out);
  CHECK(p["results"][0]["p"] == "190569292");
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> sim{"simulate", "--model", "discrete", "--n", "8", "--trials",
                                     "3000", "--seed", "77", "--format", "csv"};
  const auto a = run(sim);
  const auto b = run(sim);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto j1 = run({"table1", "--rows", "2,4"});
  const auto j2 = run({"table1", "--rows", "2,4"});
  CHECK(j1.out == j2.out);
  const auto doc = nlohmann::json::parse(run({"simulate", "--model", "discrete", "--n", "8",
                                              "--trials", "100", "--seed", "77"}).out);
  CHECK(doc["meta"]["seed"] == 77);
  CHECK_FALSE(doc["meta"].contains("wall_time_s"));
}

TEST_CASE("timing flag") {
  const auto doc = nlohmann::json::parse(run({"moments", "--k", "1", "--timing"}).out);
  CHECK(doc["meta"]["wall_time_s"].get<double>() >= 0.0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
  CHECK(run({"moments"}).exit_code == 2);
  CHECK(run({"moments", "--k", "17"}).exit_code == 2);
  CHECK(run({"table1", "--rows", "1", "--format", "xml"}).exit_code == 2);
  CHECK(run({"zeta", "eval", "--s", "1", "--a", "1"}).exit_code == 2);
  CHECK(run({"finite", "argmax", "--model", "continuous", "--n", "3", "--m", "4"}).exit_code == 2);
  CHECK(run({"simulate", "--model", "continuous", "--n", "100000", "--trials", "1000000",
             "--seed", "1"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
  CHECK(run({"--rel-tol", "1e-3", "maxprob", "--m", "3"}).exit_code == 2);
  const auto conv = run({"zeta", "eval", "--s", "-40", "--a", "0.5"});
  CHECK(conv.exit_code == 3);
  const auto doc = nlohmann::json::parse(conv.out);
  CHECK(doc["meta"]["status"] == "convergence_error");
  CHECK(doc["results"][0]["converged"] == false);
  CHECK_FALSE(conv.err.empty());
}

}
