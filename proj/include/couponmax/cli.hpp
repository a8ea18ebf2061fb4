#pragma once

// Command-line front end. `run` is the whole program minus process I/O so it
// can be driven from tests.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "couponmax/maxprob.hpp"
#include "couponmax/moments.hpp"

namespace couponmax::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Format { json, csv };

/// Empty cells render as null (json) or an empty field (csv).
using Cell = std::variant<std::monostate, bool, std::int64_t, std::uint64_t,
                          double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Everything in the output envelope except the results.
struct EnvelopeHeader {
  std::string command;
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<std::pair<std::string, Cell>> meta;
};

Table to_table(const std::vector<ArgmaxRow>& rows);
Table to_table(const std::vector<MomentReport>& rows);

/// csv: header row plus one line per row. json: one envelope document whose
/// results array holds one object per row.
std::string render_table(const Table& table, Format format,
                         const EnvelopeHeader& header = {});

/// Shortest-independent fixed rendering: 17 significant digits, '.' decimal
/// point, "nan" / "inf" / "-inf" for non-finite values.
std::string format_double(double value);

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConvergence = 3;

/// argv excludes the program name.
RunResult run(const std::vector<std::string>& args);

}  // namespace couponmax::cli
