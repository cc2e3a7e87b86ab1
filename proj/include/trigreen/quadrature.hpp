#pragma once

// Brute-force reference values of G from the Brillouin-zone integral
//   G(x) = (1/4pi^2) int_{[-pi,pi]^2} e^{i x.xi} / sigma(xi; k^2 + i eps) dxi
// with a tensor-product rule. Oracle scale only: small |x|, fixed meshes.

#include <memory>
#include <string>
#include <vector>

#include "trigreen/dense_matrix.hpp"
#include "trigreen/lattice.hpp"

namespace trigreen {

/// k^2 - 6 + 2cos xi1 + 2cos xi2 + 2cos(xi1 - xi2).
cplx sigma(double xi1, double xi2, cplx k2);
/// k^2 - 8 + 4 cos eta2 (cos eta1 + cos eta2), the same symbol after
/// eta1 = (xi1 + xi2)/2, eta2 = (xi1 - xi2)/2.
cplx sigma_tilde(double eta1, double eta2, cplx k2);

enum class QuadRule { Trapezoid, Simpson, GaussLegendre };

std::string to_string(QuadRule rule);
/// "trapezoid", "simpson" or "gauss".
QuadRule parse_quad_rule(const std::string& name);

struct QuadratureSpec {
  QuadRule rule = QuadRule::Simpson;
  int mesh = 2001;          // points per axis (nodes for Gauss)
  double epsilon = 1e-2;    // added to Im k^2
  double tolerance = 1e-3;  // relative bar for the error flag
};

struct QuadratureResult {
  cplx value;
  double error_estimate;   // absolute, from the coarser level
  bool exceeds_tolerance;  // error_estimate > tolerance * |value|
};

/// Nodes and weights of one axis of the rule on [-pi, pi].
void axis_rule(QuadRule rule, int mesh, std::vector<double>& nodes, std::vector<double>& weights);

/// Mesh of the coarser level used for the error estimate.
int coarse_mesh(QuadRule rule, int mesh);

/// Reusable evaluator: 1/sigma is tabulated once per (k^2, spec).
class GreenIntegral {
 public:
  GreenIntegral(cplx k2, const QuadratureSpec& spec, Backend backend = Backend::Parallel);
  ~GreenIntegral();
  GreenIntegral(GreenIntegral&&) noexcept;
  GreenIntegral& operator=(GreenIntegral&&) noexcept;

  QuadratureResult evaluate(LatticeIndex x) const;
  const QuadratureSpec& spec() const noexcept { return spec_; }

 private:
  struct Level;
  QuadratureSpec spec_;
  Backend backend_;
  std::unique_ptr<Level> fine_;
  std::unique_ptr<Level> coarse_;
};

/// One-shot convenience wrapper around GreenIntegral.
QuadratureResult green_integral(LatticeIndex x, cplx k2, const QuadratureSpec& spec);

/// Largest |x1| + |x2| the oracle accepts.
inline constexpr int kOracleMaxDistance = 6;

}  // namespace trigreen
