#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "spectral/solver.hpp"

namespace spectral::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { ok = 0, input_error = 1, numerical_failure = 2 };

struct RankedRow {
  std::size_t rank = 0;  // 1-based, contiguous
  std::string label;
  std::vector<double> values;  // one per column
};

/// Result table plus the metadata echoed with it.
struct RankedOutput {
  std::string method;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::size_t n = 0;
  std::size_t m = 0;
  SolveReport report;
  std::vector<std::string> warnings;
  std::vector<std::string> columns;
  std::vector<RankedRow> rows;
};

/// Rows sorted by the first column descending, ties by label ascending
/// (byte order); ranks 1..n. `columns[c][i]` is the value of node i.
std::vector<RankedRow> rank_rows(const std::vector<std::string>& labels,
                                 const std::vector<std::vector<double>>& columns);

/// `#`-prefixed metadata lines, a header line, then one TAB-separated row
/// per node with values printed to 12 significant digits.
void write_tsv(std::ostream& out, const RankedOutput& result);

/// JSON object with the fields method, params, n, m, iterations, residual,
/// eigenvalue, converged, warnings, rows.
void write_json(std::ostream& out, const RankedOutput& result);

/// Runs the tool on `args` (without the program name). Diagnostics go to
/// `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectral::cli
