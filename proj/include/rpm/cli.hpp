#pragma once

// Commands behind the command-line front end. Each returns a report and the
// process exit code; argument parsing lives in tools/.

#include <optional>
#include <string>
#include <vector>

#include "rpm/report.hpp"

namespace rpm {

enum ExitCode { exit_ok = 0, exit_error = 1, exit_partial = 2, exit_mismatch = 3 };

struct RunConfig {
  std::string command;
  std::string potential;  // empty: the command's default
  std::string geometry;  // empty: the command's default
  std::string ansatz = "f";
  int d_min = 0;  // scan dimension for root discovery; 0 picks min(D_max - 6, 12)
  int d_max = 40;
  std::vector<int> offsets{0};
  std::optional<int> digits;  // nullopt: auto, 30 + 5 D_max
  Format format = Format::text;
  std::string targets_file;  // one value per line, compared against rows in order
  int count = 5;
  std::string v0;
  int state = 0;
  int order = 5;
  int table = 0;
  std::optional<int> rows;  // table rows to reproduce; all by default
  std::string golden_dir;

  /// Explicit digits, else $RPM_DIGITS, else the auto rule at D_max.
  int resolved_digits() const;
};

struct CommandResult {
  Report report;
  int exit_code = exit_ok;
};

CommandResult cmd_critical(const RunConfig& config);
CommandResult cmd_eigen(const RunConfig& config);
CommandResult cmd_perturb(const RunConfig& config);
CommandResult cmd_table(const RunConfig& config);

/// Dispatches on config.command.
CommandResult run_command(const RunConfig& config);

}  // namespace rpm
