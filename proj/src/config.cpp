#include "trigreen/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "trigreen/errors.hpp"

namespace trigreen {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& key, std::string value, std::size_t min_count,
                                std::size_t max_count) {
  std::replace(value.begin(), value.end(), ',', ' ');
  std::istringstream ss(value);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  if (out.size() < min_count || out.size() > max_count) {
    std::ostringstream msg;
    msg << "expected ";
    if (min_count == max_count) {
      msg << min_count;
    } else {
      msg << min_count << " to " << max_count;
    }
    msg << " value(s), got " << out.size();
    throw ConfigError(key, msg.str());
  }
  return out;
}

double to_real(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError(key, "'" + text + "' is not a finite number");
  }
  return v;
}

long long to_integer(const std::string& key, const std::string& text) {
  long long v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(key, "'" + text + "' is not an integer");
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  const long long v = to_integer(key, text);
  if (v < -(1LL << 30) || v > (1LL << 30)) throw ConfigError(key, "value out of range");
  return static_cast<int>(v);
}

}  // namespace

double RunConfig::effective_epsilon(const std::string& command) const {
  if (epsilon) return *epsilon;
  if (command == "oracle") return 1e-2;
  return guess == GuessKind::Shift ? 1e-6 : 0.0;
}

void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "k") {
    cfg.k = to_real(key, tokens(key, v, 1, 1)[0]);
  } else if (key == "epsilon" || key == "eps") {
    cfg.epsilon = to_real("epsilon", tokens("epsilon", v, 1, 1)[0]);
  } else if (key == "n") {
    cfg.n = to_int(key, tokens(key, v, 1, 1)[0]);
  } else if (key == "m") {
    cfg.m = to_int(key, tokens(key, v, 1, 1)[0]);
  } else if (key == "guess") {
    try {
      cfg.guess = parse_guess_kind(tokens(key, v, 1, 1)[0]);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key, e.what());
    }
  } else if (key == "h") {
    const auto t = tokens(key, v, 1, 2);
    cfg.h = cplx(to_real(key, t[0]), t.size() == 2 ? to_real(key, t[1]) : 0.0);
  } else if (key == "preset") {
    cfg.preset = tokens(key, v, 1, 1)[0];
  } else if (key == "point") {
    const auto t = tokens(key, v, 3, 4);
    cfg.points.push_back({to_integer(key, t[0]), to_integer(key, t[1])});
    cfg.data.emplace_back(to_real(key, t[2]), t.size() == 4 ? to_real(key, t[3]) : 0.0);
  } else if (key == "window") {
    const auto t = tokens(key, v, 4, 4);
    cfg.window = {to_integer(key, t[0]), to_integer(key, t[1]), to_integer(key, t[2]),
                  to_integer(key, t[3])};
  } else if (key == "out") {
    cfg.out = v;
  } else if (key == "table") {
    cfg.table = v;
  } else if (key == "rule") {
    try {
      cfg.quad.rule = parse_quad_rule(tokens(key, v, 1, 1)[0]);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key, e.what());
    }
  } else if (key == "mesh") {
    cfg.quad.mesh = to_int(key, tokens(key, v, 1, 1)[0]);
  } else if (key == "tolerance") {
    cfg.quad.tolerance = to_real(key, tokens(key, v, 1, 1)[0]);
  } else if (key == "p0") {
    cfg.p0 = to_int(key, tokens(key, v, 1, 1)[0]);
  } else if (key == "levels") {
    const auto t = tokens(key, v, 1, 16);
    cfg.levels.clear();
    for (const auto& s : t) cfg.levels.push_back(to_int(key, s));
  } else if (key == "distance") {
    cfg.distance = to_int(key, tokens(key, v, 1, 1)[0]);
  } else {
    throw ConfigError(key, "unknown key");
  }
}

RunConfig parse_config(std::istream& is) {
  RunConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line, "line " + std::to_string(line_no) + " has no '='");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("", "line " + std::to_string(line_no) + " has an empty key");
    set_config_value(cfg, key, line.substr(eq + 1));
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("config", "cannot open '" + path + "'");
  return parse_config(is);
}

void validate_config(const RunConfig& cfg, const std::string& command) {
  if (!(cfg.k > 0.0) || !(cfg.k < 2.0 * std::numbers::sqrt2)) {
    throw ConfigError("k", "must lie in (0, 2*sqrt(2))");
  }
  const double eps = cfg.effective_epsilon(command);
  if (eps < 0.0) throw ConfigError("epsilon", "must be nonnegative");
  if (cfg.guess == GuessKind::Shift && !(eps > 0.0)) {
    throw ConfigError("epsilon", "the shift guess needs epsilon > 0");
  }
  if (cfg.n < 1 || cfg.n % 2 == 0) throw ConfigError("n", "truncation must be odd and positive");
  if (cfg.m && (*cfg.m < 0 || *cfg.m > cfg.n)) throw ConfigError("m", "must satisfy 0 <= m <= n");
  if (cfg.h && *cfg.h == 0.0) throw ConfigError("h", "must be nonzero");
  const auto& w = cfg.window;
  if (w.x1min > w.x1max || w.x2min > w.x2max) throw ConfigError("window", "window is empty");

  if (command == "solve") {
    if (!cfg.preset.empty()) {
      const auto names = preset_names();
      if (std::find(names.begin(), names.end(), cfg.preset) == names.end()) {
        throw ConfigError("preset", "unknown preset '" + cfg.preset + "'");
      }
      if (!cfg.points.empty()) throw ConfigError("point", "cannot combine points with a preset");
    } else if (cfg.points.empty()) {
      throw ConfigError("point", "boundary list is empty (give point lines or a preset)");
    } else {
      BoundaryProblem p{cfg.points, cfg.data, Wavenumber(cfg.k, eps)};
      try {
        p.validate();
      } catch (const DomainError& e) {
        throw ConfigError("point", e.what());
      }
    }
  } else if (command == "convergence") {
    if (cfg.p0 < 1) throw ConfigError("p0", "must be positive");
    if (cfg.levels.empty()) throw ConfigError("levels", "no levels given");
    for (std::size_t i = 0; i < cfg.levels.size(); ++i) {
      if (cfg.levels[i] < 0 || cfg.levels[i] > 12) throw ConfigError("levels", "levels must lie in 0..12");
      if (i > 0 && cfg.levels[i] <= cfg.levels[i - 1]) {
        throw ConfigError("levels", "levels must be strictly increasing");
      }
    }
    if (cfg.guess == GuessKind::Heuristic) {
      throw ConfigError("guess", "the first column uses zero or shift; the heuristic is the second column");
    }
  } else if (command == "oracle") {
    if (cfg.distance < 0 || cfg.distance > kOracleMaxDistance) {
      throw ConfigError("distance", "must lie in 0.." + std::to_string(kOracleMaxDistance));
    }
    if (!(eps > 0.0)) throw ConfigError("epsilon", "the oracle needs epsilon > 0");
    if (cfg.quad.rule == QuadRule::Simpson && cfg.quad.mesh % 2 == 0) {
      throw ConfigError("mesh", "Simpson's rule needs an odd mesh");
    }
    if (cfg.quad.mesh < 3) throw ConfigError("mesh", "must be at least 3");
    if (!(cfg.quad.tolerance > 0.0)) throw ConfigError("tolerance", "must be positive");
  } else if (command != "green" && command != "field") {
    throw ConfigError("command", "unknown command '" + command + "'");
  }
}

}  // namespace trigreen
