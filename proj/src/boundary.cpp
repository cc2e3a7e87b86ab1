#include "trigreen/boundary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "trigreen/errors.hpp"
#include "trigreen/kernels.hpp"

namespace trigreen {

void BoundaryProblem::validate() const {
  if (points.empty()) throw DomainError("boundary problem has no points");
  if (points.size() != data.size()) {
    throw DomainError("boundary problem has " + std::to_string(points.size()) + " points but " +
                      std::to_string(data.size()) + " data values");
  }
  std::set<LatticeIndex> seen;
  for (const auto& y : points) {
    if (!seen.insert(y).second) {
      throw DomainError("boundary point (" + std::to_string(y.x1) + "," + std::to_string(y.x2) +
                        ") is repeated");
    }
  }
}

std::vector<std::string> preset_names() { return {"example1-sym", "example1-skew", "example2"}; }

BoundaryProblem preset_problem(const std::string& name, const Wavenumber& k) {
  BoundaryProblem p;
  p.k = k;
  if (name == "example1-sym" || name == "example1-skew") {
    p.points = {{-5, 0}, {-4, 0}, {4, 0}, {5, 0}};
    p.data = {1.0, 1.0, 1.0, 1.0};
    if (name == "example1-skew") p.data[0] = p.data[1] = -1.0;
    return p;
  }
  if (name == "example2") {
    p.points = {{-3, 1}, {-2, 1}, {-1, 1}, {0, 1}, {1, 1},
                {-2, -1}, {-1, -1}, {0, -1}, {1, -1}, {2, -1}};
    p.data.assign(p.points.size(), 1.0);
    return p;
  }
  throw DomainError("unknown preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// Potentials

cplx single_layer(const LatticeField& phi, LatticeIndex x, const GreenTable& table,
                  const Region& region) {
  cplx sum = 0.0;
  for (const auto& y : region.boundary()) sum += green(table, x - y) * phi(y);
  return sum;
}

namespace {

// T in the y argument of G(x - y) along side j: G(x - y) - G(x - y + e_j).
cplx normal_green(const GreenTable& table, LatticeIndex x, LatticeIndex y, int side) {
  return green(table, x - y) - green(table, x - y + direction(side));
}

}  // namespace

cplx double_layer(const LatticeField& phi, LatticeIndex x, const GreenTable& table,
                  const Region& region) {
  cplx sum = 0.0;
  for (const auto& y : region.boundary()) {
    cplx kernel = normal_green(table, x, y, region.side_of(y));
    if (x == y) kernel += 1.0;
    sum += kernel * phi(y);
  }
  return sum;
}

cplx double_layer_all_sides(const LatticeField& phi, LatticeIndex x, const GreenTable& table,
                            const Region& region) {
  cplx sum = 0.0;
  for (const auto& y : region.boundary()) {
    cplx kernel = x == y ? 1.0 : 0.0;
    for (int j : region.sides_of(y)) kernel += normal_green(table, x, y, j);
    sum += kernel * phi(y);
  }
  return sum;
}

double representation_check(const LatticeField& u, const Region& region, const GreenTable& table) {
  std::vector<std::pair<LatticeIndex, std::pair<cplx, cplx>>> bdry;
  for (const auto& y : region.boundary()) {
    bdry.push_back({y, {u(y), total_normal_difference(u, y, region)}});
  }
  double worst = 0.0;
  for (const auto& x : region.interior()) {
    cplx sum = 0.0;
    for (const auto& [y, vals] : bdry) {
      cplx tg = 0.0;
      for (int j : region.sides_of(y)) tg += normal_green(table, x, y, j);
      sum += vals.first * tg - green(table, x - y) * vals.second;
    }
    worst = std::max(worst, std::abs(u(x) - sum));
  }
  return worst;
}

double helmholtz_residual(const LatticeField& u, const Region& region, cplx k2) {
  double worst = 0.0;
  for (const auto& x : region.interior()) worst = std::max(worst, std::abs(apply_helmholtz(u, x, k2)));
  return worst;
}

// ---------------------------------------------------------------------------
// Boundary system

DenseMatrix assemble_H(const BoundaryProblem& problem, const GreenTable& table) {
  problem.validate();
  const std::size_t m = problem.points.size();
  DenseMatrix h(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      h(i, j) = green(table, problem.points[i] - problem.points[j]);
    }
  }
  return h;
}

DensityVector solve_density(const BoundaryProblem& problem, const GreenTable& table) {
  const DenseMatrix h = assemble_H(problem, table);
  LUFactors f = lu_factor_nothrow(h);
  DensityVector out;
  out.abs_det = std::abs(determinant(f));
  if (f.weak_pivot >= 0) {
    throw NearSingularBoundary("boundary matrix H is numerically singular at pivot " +
                                   std::to_string(f.weak_pivot),
                               out.abs_det, std::numeric_limits<double>::infinity());
  }
  out.cond2 = cond2_estimate(h, f);
  out.phi = lu_solve(f, problem.data);
  const auto hphi = h * out.phi;
  for (std::size_t i = 0; i < hphi.size(); ++i) {
    out.residual = std::max(out.residual, std::abs(hphi[i] - problem.data[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fields

std::size_t FieldGrid::index(LatticeIndex x) const {
  if (!window.contains(x)) throw DomainError("point outside the field window");
  return static_cast<std::size_t>(x.x2 - window.x2min) * window.width() +
         static_cast<std::size_t>(x.x1 - window.x1min);
}

LatticeIndex FieldGrid::point(std::size_t idx) const {
  const auto w = window.width();
  return {window.x1min + static_cast<std::int64_t>(idx % w),
          window.x2min + static_cast<std::int64_t>(idx / w)};
}

namespace {

FieldGrid empty_grid(const Window& window) {
  if (window.x1min > window.x1max || window.x2min > window.x2max) {
    throw DomainError("field window is empty");
  }
  FieldGrid grid;
  grid.window = window;
  grid.values.assign(window.width() * window.height(), 0.0);
  grid.boundary.assign(grid.values.size(), 0);
  return grid;
}

}  // namespace

FieldGrid eval_field(const BoundaryProblem& problem, const DensityVector& density,
                     const GreenTable& table, const Window& window, Backend backend) {
  problem.validate();
  if (density.phi.size() != problem.points.size()) {
    throw DomainError("density length does not match the boundary");
  }
  FieldGrid grid = empty_grid(window);
  const int need = required_radius(problem.points, window);
  if (need > table.radius()) throw RadiusExceeded(need, table.radius());

  std::vector<std::int64_t> targets(2 * grid.values.size());
  for (std::size_t t = 0; t < grid.values.size(); ++t) {
    const LatticeIndex x = grid.point(t);
    targets[2 * t] = x.x1;
    targets[2 * t + 1] = x.x2;
  }
  std::vector<std::int64_t> sources(2 * problem.points.size());
  for (std::size_t j = 0; j < problem.points.size(); ++j) {
    sources[2 * j] = problem.points[j].x1;
    sources[2 * j + 1] = problem.points[j].x2;
  }
  const kernels::FieldTask task{targets.data(), grid.values.size(), sources.data(),
                                density.phi.data(), problem.points.size()};
  const auto lookup = [&table](std::int64_t d1, std::int64_t d2) {
    return green(table, LatticeIndex{d1, d2});
  };
  if (backend == Backend::Serial) {
    kernels::serial::single_layer(task, lookup, grid.values.data());
  } else {
    kernels::parallel::single_layer(task, lookup, grid.values.data());
  }
  for (const auto& y : problem.points) {
    if (window.contains(y)) grid.boundary[grid.index(y)] = 1;
  }
  return grid;
}

FieldGrid green_field(const GreenTable& table, const Window& window) {
  FieldGrid grid = empty_grid(window);
  const int need = required_radius({LatticeIndex{0, 0}}, window);
  if (need > table.radius()) throw RadiusExceeded(need, table.radius());
  for (std::size_t t = 0; t < grid.values.size(); ++t) grid.values[t] = green(table, grid.point(t));
  if (window.contains({0, 0})) grid.boundary[grid.index({0, 0})] = 1;
  return grid;
}

int required_radius(const std::vector<LatticeIndex>& points, const Window& window) {
  // Lattice distance is a norm, so over the window it peaks at a corner.
  const std::array<LatticeIndex, 4> corners{LatticeIndex{window.x1min, window.x2min},
                                            LatticeIndex{window.x1min, window.x2max},
                                            LatticeIndex{window.x1max, window.x2min},
                                            LatticeIndex{window.x1max, window.x2max}};
  std::int64_t need = 0;
  for (const auto& y : points) {
    for (const auto& c : corners) need = std::max(need, lattice_distance(c - y));
    for (const auto& z : points) need = std::max(need, lattice_distance(z - y));
  }
  return static_cast<int>(need);
}

std::vector<std::pair<double, double>> decay_profile(const FieldGrid& grid, double angle,
                                                     double r_min, double r_max) {
  std::vector<std::pair<double, double>> out;
  std::set<LatticeIndex> visited;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double reach = std::hypot(static_cast<double>(grid.window.width()),
                                  static_cast<double>(grid.window.height())) +
                       std::hypot(static_cast<double>(std::max(std::abs(grid.window.x1min),
                                                               std::abs(grid.window.x1max))),
                                  static_cast<double>(std::max(std::abs(grid.window.x2min),
                                                               std::abs(grid.window.x2max))));
  const double stop = std::min(r_max, reach);
  for (double r = std::max(r_min, 0.0); r <= stop; r += 1.0) {
    const double px = r * c;
    const double py = r * s;
    const double x2 = py * 2.0 / std::numbers::sqrt3;
    const LatticeIndex site{static_cast<std::int64_t>(std::llround(px - 0.5 * x2)),
                            static_cast<std::int64_t>(std::llround(x2))};
    if (!grid.window.contains(site) || !visited.insert(site).second) continue;
    const auto cart = to_cartesian(site);
    const double radius = std::hypot(cart.x, cart.y);
    if (radius == 0.0) continue;
    out.emplace_back(radius, std::abs(grid.at(site)) * std::sqrt(radius));
  }
  if (out.empty()) throw DomainError("decay ray does not meet the field window");
  return out;
}

}  // namespace trigreen
