#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "asymexp/continuation.hpp"
#include "asymexp/error.hpp"
#include "asymexp/functions.hpp"

namespace asymexp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitInput = 3,
  kExitNumerical = 4,
};

/// Exit code for a failed operation: numerical-contract violations map to
/// kExitNumerical, everything else (bad files, bad values) to kExitInput.
int exit_code_for(const Error& error);

struct TransformOptions {
  std::string input = "arctan";
  long m = 32;  ///< coefficients taken from the input
  long lag = 4;
  int digits = 19;
  std::filesystem::path out;
};

struct ContinueOptions {
  std::string input = "arctan";
  long m = 701;
  std::string dx = "0.25";
  std::string alpha = "0.1";
  int digits = 19;
  long tail_window = 2;
  long count = 2;  ///< q' coefficients to extract
  std::filesystem::path out;
};

struct ConvertOptions {
  std::string input;  ///< coefficient file, with or without a "file:" prefix
  std::string direction = "to-q";
  int digits = 19;
  std::filesystem::path out;
};

struct DirectOptions {
  std::string input = "arctan";
  long k = 0;
  std::string schedule;  ///< "5..30", "10..100:10" or "5,10,20"; empty means no partials
  long m = 0;            ///< coefficients taken from the input; 0 means max(schedule) + 1
  double tol = 1e-6;
  int digits = 19;
  std::filesystem::path out;
};

struct SweepOptions {
  std::string input = "arctan";
  std::vector<long> m{98, 201, 301, 401, 501, 601, 701, 801, 901, 1001};
  std::vector<std::string> dx{"0.125", "0.25", "0.5"};
  std::vector<std::string> alpha{"0.1"};
  int digits = 19;
  long tail_window = 2;
  unsigned jobs = 0;  ///< 0 means one per hardware thread
  std::filesystem::path out;
};

/// Each command writes its report to `out` (required) and a short summary to
/// `log`. They throw asymexp::Error on failure.
void cmd_transform(const TransformOptions& options, std::ostream& log);
void cmd_continue(const ContinueOptions& options, std::ostream& log);
void cmd_convert(const ConvertOptions& options, std::ostream& log);
void cmd_direct(const DirectOptions& options, std::ostream& log);
void cmd_sweep(const SweepOptions& options, std::ostream& log);

/// Parses "a..b", "a..b:step" or a comma list into strictly increasing m values.
std::vector<long> parse_schedule(std::string_view text);

/// Reference values of c_0(1) and c_1(1), when the input has known ones.
struct SweepReference {
  Decimal c0;
  Decimal c1;
};

std::optional<SweepReference> reference_for(const GeneratorSpec& spec, int digits);

struct SweepRow {
  SchemeConfig config;
  std::optional<Decimal> c0;  ///< raw c_0(1); empty when the path never reached 1
  std::optional<Decimal> c1;
  std::optional<Decimal> err0;  ///< |c0 - reference|, from the raw value
  std::optional<Decimal> err1;
  long converged_count = 0;
  long steps = 0;  ///< recentering steps completed
  std::string status;  ///< "ok", "unconverged", or the error that stopped the run

  /// Fewer than two converged coefficients at center 1.
  bool unconverged() const { return converged_count < 2; }
};

struct SweepReport {
  std::vector<SweepRow> rows;

  std::string to_csv() const;
  std::string to_json() const;
};

struct SweepGrid {
  std::vector<long> m;
  std::vector<Decimal> dx;
  std::vector<Decimal> alpha;
  int digits = 19;
  long tail_window = 2;
};

/// Runs every grid cell, `jobs` at a time, over one shared associated series
/// (which must hold at least max(m) coefficients). Rows come back ordered by
/// (m, dx, alpha) regardless of `jobs`. Numerical failures inside a cell are
/// recorded in the row; every 1/dx must be integral up front.
SweepReport run_sweep(const std::variant<AssociatedSeries<Rational>, AssociatedSeries<Decimal>>& assoc,
                      const SweepGrid& grid, const std::optional<SweepReference>& reference, unsigned jobs);

/// Full command line entry point ("asymexp <command> [options]").
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace asymexp::cli
