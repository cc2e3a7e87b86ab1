#pragma once

// Exterior Dirichlet problems by a single-layer ansatz u(x) = sum_i G(x - y_i) phi_i,
// plus the difference potentials and the checks built on them.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trigreen/dense_matrix.hpp"
#include "trigreen/green_engine.hpp"
#include "trigreen/lattice.hpp"

namespace trigreen {

struct BoundaryProblem {
  std::vector<LatticeIndex> points;
  std::vector<cplx> data;
  Wavenumber k{2.0, 1e-6};

  /// Throws DomainError on duplicate points, a length mismatch or no points.
  void validate() const;
};

/// Built-in problems: "example1-sym", "example1-skew", "example2".
BoundaryProblem preset_problem(const std::string& name, const Wavenumber& k);
std::vector<std::string> preset_names();

/// Single-layer potential sum_{y in boundary} G(x - y) phi(y).
cplx single_layer(const LatticeField& phi, LatticeIndex x, const GreenTable& table,
                  const Region& region);

/// Double-layer potential sum_y (T G(x - y) + delta_{x,y}) phi(y), with T the
/// normal difference in the y argument along e_{side_of(y)}.
cplx double_layer(const LatticeField& phi, LatticeIndex x, const GreenTable& table,
                  const Region& region);

/// As double_layer with T summed over every side containing y. This is the
/// form annihilated by the Helmholtz operator at every interior point,
/// including points next to boundary sites that lie on several sides.
cplx double_layer_all_sides(const LatticeField& phi, LatticeIndex x, const GreenTable& table,
                            const Region& region);

/// max over interior x of |u(x) - sum_y (u(y) T G(x - y) - G(x - y) T u(y))|,
/// T summed over all sides of y.
double representation_check(const LatticeField& u, const Region& region, const GreenTable& table);

/// max over interior x of |(Delta_d + k~^2) u(x)|; the precondition of
/// representation_check.
double helmholtz_residual(const LatticeField& u, const Region& region, cplx k2);

/// H[i][j] = G(y_i - y_j).
DenseMatrix assemble_H(const BoundaryProblem& problem, const GreenTable& table);

struct DensityVector {
  std::vector<cplx> phi;
  double residual = 0.0;  // max_i |(H phi)_i - f_i|
  double abs_det = 0.0;
  double cond2 = 0.0;
};

/// Solves H phi = f. A weak pivot raises NearSingularBoundary with |det H|
/// and the condition estimate attached.
DensityVector solve_density(const BoundaryProblem& problem, const GreenTable& table);

struct Window {
  std::int64_t x1min = -40;
  std::int64_t x1max = 40;
  std::int64_t x2min = -40;
  std::int64_t x2max = 40;

  std::size_t width() const { return static_cast<std::size_t>(x1max - x1min + 1); }
  std::size_t height() const { return static_cast<std::size_t>(x2max - x2min + 1); }
  bool contains(LatticeIndex x) const {
    return x.x1 >= x1min && x.x1 <= x1max && x.x2 >= x2min && x.x2 <= x2max;
  }
};

/// Field values on a window, x1 fastest.
struct FieldGrid {
  Window window;
  std::vector<cplx> values;
  std::vector<std::uint8_t> boundary;

  std::size_t index(LatticeIndex x) const;
  cplx at(LatticeIndex x) const { return values[index(x)]; }
  LatticeIndex point(std::size_t idx) const;
};

/// u(x) = sum_i G(x - y_i) phi_i on every window point.
FieldGrid eval_field(const BoundaryProblem& problem, const DensityVector& density,
                     const GreenTable& table, const Window& window,
                     Backend backend = Backend::Parallel);

/// G itself sampled on the window; the origin is flagged as the source.
FieldGrid green_field(const GreenTable& table, const Window& window);

/// Table radius needed to assemble H and evaluate the field on the window.
int required_radius(const std::vector<LatticeIndex>& points, const Window& window);

/// (r, |u| sqrt(r)) along the ray at `angle` (radians, physical plane),
/// sampling the nearest lattice site at each unit radius in [r_min, r_max].
std::vector<std::pair<double, double>> decay_profile(const FieldGrid& grid, double angle,
                                                     double r_min = 1.0, double r_max = 1e9);

}  // namespace trigreen
