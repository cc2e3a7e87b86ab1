#include "trigreen/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "trigreen/errors.hpp"
#include "trigreen/field_csv.hpp"
#include "trigreen/table_io.hpp"

namespace trigreen {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string show(cplx z) { return fmt("%.10e", z.real()) + " " + fmt("%+.10e", z.imag()) + "i"; }

Wavenumber wavenumber_of(const RunConfig& cfg, const std::string& command) {
  return Wavenumber(cfg.k, cfg.effective_epsilon(command));
}

std::string or_default(const std::string& path, const std::string& fallback) {
  return path.empty() ? fallback : path;
}

BoundaryProblem problem_of(const RunConfig& cfg, const Wavenumber& k) {
  if (!cfg.preset.empty()) return preset_problem(cfg.preset, k);
  return BoundaryProblem{cfg.points, cfg.data, k};
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(double k, double epsilon, GuessKind first_guess,
                                              int p0, const std::vector<int>& levels) {
  const int compare = 2 * p0 - 1;
  std::vector<ConvergenceRow> rows;
  std::optional<GreenTable> prev_first;
  std::optional<GreenTable> prev_second;
  for (int m : levels) {
    const int n_trunc = (1 << (m + 1)) * p0 - 1;
    GreenTable first = build_table(Wavenumber(k, epsilon), n_trunc, compare, first_guess);
    GreenTable second = build_table(Wavenumber(k, 0.0), n_trunc, compare, GuessKind::Heuristic);
    ConvergenceRow row{m, n_trunc, std::nullopt, std::nullopt};
    if (prev_first) {
      row.first = max_table_difference(first, *prev_first, compare);
      row.second = max_table_difference(second, *prev_second, compare);
    }
    rows.push_back(row);
    prev_first.emplace(std::move(first));
    prev_second.emplace(std::move(second));
  }
  return rows;
}

void cmd_green(const RunConfig& cfg, std::ostream& out) {
  const Wavenumber k = wavenumber_of(cfg, "green");
  const int radius = cfg.m.value_or(std::min(40, cfg.n));
  const GreenTable table = build_table(k, cfg.n, radius, cfg.guess, cfg.h);
  const std::string path = or_default(cfg.out, "green_table.txt");
  save_table(path, table);
  out << "guess      " << table.guess().describe() << '\n';
  out << "N, M       " << table.truncation() << ", " << table.radius() << '\n';
  out << "G(0,0)     " << show(table.at(0, 0)) << '\n';
  if (table.radius() >= 1) out << "G(1,0)     " << show(table.at(1, 0)) << '\n';
  if (table.radius() >= 1) out << "residual   " << fmt("%.3e", defining_residual(table)) << '\n';
  out << "entries    " << table.values().size() << '\n';
  out << "table      " << path << '\n';
}

void cmd_convergence(const RunConfig& cfg, std::ostream& out) {
  const double eps = cfg.effective_epsilon("convergence");
  const auto rows = convergence_study(cfg.k, eps, cfg.guess, cfg.p0, cfg.levels);
  out << "# k = " << cfg.k << ", p0 = " << cfg.p0 << ", compared on i + j <= " << 2 * cfg.p0 - 1
      << '\n';
  out << "# column 1: " << to_string(cfg.guess) << " guess, epsilon = " << eps
      << "; column 2: heuristic guess, epsilon = 0\n";
  out << "m,N,first,second\n";
  std::ostringstream csv;
  csv << "m,N,first,second\n";
  for (const auto& r : rows) {
    const std::string a = r.first ? fmt("%.10e", *r.first) : "-";
    const std::string b = r.second ? fmt("%.10e", *r.second) : "-";
    out << r.level << ',' << r.n_trunc << ',' << a << ',' << b << '\n';
    csv << r.level << ',' << r.n_trunc << ',' << a << ',' << b << '\n';
  }
  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out);
    if (!os) throw std::runtime_error("cannot open '" + cfg.out + "' for writing");
    os << csv.str();
  }
}

void cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Wavenumber k = wavenumber_of(cfg, "solve");
  const BoundaryProblem problem = problem_of(cfg, k);
  const int need = required_radius(problem.points, cfg.window);
  const int radius = cfg.m.value_or(need);
  if (radius < need) throw ConfigError("m", "radius " + std::to_string(radius) + " is below the " +
                                                std::to_string(need) + " needed by the window");
  if (radius > cfg.n) {
    throw ConfigError("n", "truncation " + std::to_string(cfg.n) + " is below the radius " +
                               std::to_string(radius) + " needed by the window");
  }
  const GreenTable table = build_table(k, cfg.n, radius, cfg.guess, cfg.h);
  const DenseMatrix h = assemble_H(problem, table);
  const DensityVector density = solve_density(problem, table);

  out << "guess      " << table.guess().describe() << '\n';
  out << "N, M       " << cfg.n << ", " << radius << '\n';
  if (h.rows() <= 12) {
    out << "H\n";
    for (std::size_t i = 0; i < h.rows(); ++i) {
      for (std::size_t j = 0; j < h.cols(); ++j) out << "  " << show(h(i, j));
      out << '\n';
    }
  }
  out << "phi\n";
  for (std::size_t i = 0; i < density.phi.size(); ++i) {
    out << "  (" << problem.points[i].x1 << "," << problem.points[i].x2 << ")  "
        << show(density.phi[i]) << '\n';
  }
  out << "residual   " << fmt("%.3e", density.residual) << '\n';
  out << "|det H|    " << fmt("%.6e", density.abs_det) << '\n';
  out << "cond2(H)   " << fmt("%.6f", density.cond2) << '\n';

  const FieldGrid grid = eval_field(problem, density, table, cfg.window);
  const std::string path = or_default(cfg.out, "field.csv");
  save_field_csv(path, grid);
  out << "field      " << path << '\n';
}

void cmd_field(const RunConfig& cfg, std::ostream& out) {
  const int need = required_radius({LatticeIndex{0, 0}}, cfg.window);
  std::optional<GreenTable> table;
  if (!cfg.table.empty()) {
    try {
      table.emplace(load_table(cfg.table));
    } catch (const std::runtime_error& e) {
      throw ConfigError("table", e.what());
    }
  } else {
    const int radius = cfg.m.value_or(need);
    if (radius > cfg.n) {
      throw ConfigError("n", "truncation " + std::to_string(cfg.n) + " is below the radius " +
                                 std::to_string(radius) + " needed by the window");
    }
    table.emplace(build_table(wavenumber_of(cfg, "field"), cfg.n, radius, cfg.guess, cfg.h));
  }
  const FieldGrid grid = green_field(*table, cfg.window);
  const std::string path = or_default(cfg.out, "green_field.csv");
  save_field_csv(path, grid);
  const auto profile = decay_profile(grid, 0.0, 10.0);
  out << "guess      " << table->guess().describe() << '\n';
  out << "points     " << grid.values.size() << '\n';
  out << "decay      |G| sqrt(r) along e1 from r = " << fmt("%.0f", profile.front().first)
      << ": " << fmt("%.4e", profile.front().second) << " .. r = "
      << fmt("%.0f", profile.back().first) << ": " << fmt("%.4e", profile.back().second) << '\n';
  out << "field      " << path << '\n';
}

void cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Wavenumber k = wavenumber_of(cfg, "oracle");
  const int radius = std::max(cfg.distance, 1);
  const GreenTable table = build_table(k, cfg.n, radius, cfg.guess, cfg.h);
  QuadratureSpec spec = cfg.quad;
  spec.epsilon = k.epsilon();
  const GreenIntegral oracle(cplx(cfg.k * cfg.k, 0.0), spec);
  out << "# k~^2 = " << cfg.k * cfg.k << " + " << k.epsilon() << "i, engine N = " << cfg.n
      << " (" << table.guess().describe() << "), " << to_string(spec.rule) << " mesh "
      << spec.mesh << '\n';
  out << "i,j,engine_re,engine_im,integral_re,integral_im,rel_error,estimate,flag\n";
  for (int d = 0; d <= cfg.distance; ++d) {
    for (int j = 0; 2 * j <= d; ++j) {
      const LatticeIndex x{d - j, j};
      const cplx engine = table.at(x.x1, x.x2);
      const QuadratureResult q = oracle.evaluate(x);
      const double rel = std::abs(q.value - engine) / std::abs(engine);
      out << x.x1 << ',' << x.x2 << ',' << fmt("%.10e", engine.real()) << ','
          << fmt("%.10e", engine.imag()) << ',' << fmt("%.10e", q.value.real()) << ','
          << fmt("%.10e", q.value.imag()) << ',' << fmt("%.3e", rel) << ','
          << fmt("%.3e", q.error_estimate) << ',' << (q.exceeds_tolerance ? "coarse" : "ok")
          << '\n';
    }
  }
}

int run_command(const std::string& command, const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  try {
    validate_config(cfg, command);
    if (command == "green") cmd_green(cfg, out);
    if (command == "convergence") cmd_convergence(cfg, out);
    if (command == "solve") cmd_solve(cfg, out);
    if (command == "field") cmd_field(cfg, out);
    if (command == "oracle") cmd_oracle(cfg, out);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NearSingularBoundary& e) {
    err << "numerical error: " << e.what() << " (|det H| = " << e.abs_det()
        << ", cond2 = " << e.cond2() << ")\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace trigreen
