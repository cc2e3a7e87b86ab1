#pragma once

// Subcommands behind the `trigreen` executable. Each writes its report to
// `out`; run_command maps failures to exit codes.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trigreen/config.hpp"

namespace trigreen {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

struct ConvergenceRow {
  int level;
  int n_trunc;
  std::optional<double> first;   // zero or shift closing guess
  std::optional<double> second;  // heuristic closing guess, epsilon = 0
};

/// Tables at N_m = 2^(m+1) p0 - 1 for each level, compared on the canonical
/// entries with i + j <= 2 p0 - 1. Row m holds the difference to the
/// previous level (empty for the first).
std::vector<ConvergenceRow> convergence_study(double k, double epsilon, GuessKind first_guess,
                                              int p0, const std::vector<int>& levels);

void cmd_green(const RunConfig& cfg, std::ostream& out);
void cmd_convergence(const RunConfig& cfg, std::ostream& out);
void cmd_solve(const RunConfig& cfg, std::ostream& out);
void cmd_field(const RunConfig& cfg, std::ostream& out);
void cmd_oracle(const RunConfig& cfg, std::ostream& out);

/// Validates, dispatches and converts exceptions into exit codes, printing
/// the message to `err`.
int run_command(const std::string& command, const RunConfig& cfg, std::ostream& out,
                std::ostream& err);

}  // namespace trigreen
