#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ydtwist::cli {

enum class Command { Module, Sweep, OneDim, TwistCheck, FormulaCheck, Validate };
enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  Command command = Command::Validate;
  int ell = 0;
  long y = 0;
  long z = 0;
  std::optional<long> y2;
  std::optional<long> z2;
  std::optional<std::pair<long, long>> g;
  std::optional<std::pair<long, long>> beta;
  OutputFormat output = OutputFormat::Json;
  unsigned jobs = 0;  ///< 0 = hardware concurrency
  std::size_t sample = 0;  ///< formula-check: 0 = every pair
  unsigned long seed = 1;
};

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kIncompatible = 3,
  kNotApplicable = 4,
  kInternal = 70,
};

/// Runs one command on a validated configuration, writing to `out`.
int execute(const RunConfig& cfg, std::ostream& out);

/// Full command line entry point: parses `args` (without the program name),
/// runs, and reports errors as a JSON object on `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ydtwist::cli
