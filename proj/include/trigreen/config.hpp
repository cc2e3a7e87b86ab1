#pragma once

// Run configuration: flat `key = value` lines, `#` starts a comment.
//
//   k = 2
//   epsilon = 1e-6
//   n = 567
//   guess = shift
//   point = -5 0 1        # x1 x2 re [im], repeatable
//   window = -40 40 -40 40

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trigreen/boundary.hpp"
#include "trigreen/green_engine.hpp"
#include "trigreen/quadrature.hpp"

namespace trigreen {

struct RunConfig {
  double k = 2.0;
  std::optional<double> epsilon;  // unset: depends on guess and command
  int n = 567;
  std::optional<int> m;
  GuessKind guess = GuessKind::Shift;
  std::optional<cplx> h;
  std::string preset;
  std::vector<LatticeIndex> points;
  std::vector<cplx> data;
  Window window;
  std::string out;
  std::string table;
  QuadratureSpec quad;
  int p0 = 71;
  std::vector<int> levels{0, 1, 2};
  int distance = 3;

  /// epsilon if set, else 1e-2 for `oracle`, 1e-6 for the shift guess, 0 otherwise.
  double effective_epsilon(const std::string& command) const;
};

/// Applies one key; throws ConfigError naming the key on any problem.
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

RunConfig parse_config(std::istream& is);
RunConfig load_config(const std::string& path);

/// Command-specific checks, run before any computation.
void validate_config(const RunConfig& cfg, const std::string& command);

}  // namespace trigreen
