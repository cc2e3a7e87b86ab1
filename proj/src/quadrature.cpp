#include "trigreen/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trigreen/errors.hpp"
#include "trigreen/kernels.hpp"

namespace trigreen {

cplx sigma(double xi1, double xi2, cplx k2) {
  return k2 - 6.0 + 2.0 * std::cos(xi1) + 2.0 * std::cos(xi2) + 2.0 * std::cos(xi1 - xi2);
}

cplx sigma_tilde(double eta1, double eta2, cplx k2) {
  return k2 - 8.0 + 4.0 * std::cos(eta2) * (std::cos(eta1) + std::cos(eta2));
}

std::string to_string(QuadRule rule) {
  switch (rule) {
    case QuadRule::Trapezoid: return "trapezoid";
    case QuadRule::Simpson: return "simpson";
    case QuadRule::GaussLegendre: return "gauss";
  }
  return "unknown";
}

QuadRule parse_quad_rule(const std::string& name) {
  if (name == "trapezoid") return QuadRule::Trapezoid;
  if (name == "simpson") return QuadRule::Simpson;
  if (name == "gauss" || name == "gauss-legendre") return QuadRule::GaussLegendre;
  throw std::invalid_argument("unknown quadrature rule '" + name +
                              "' (expected trapezoid, simpson or gauss)");
}

void axis_rule(QuadRule rule, int mesh, std::vector<double>& nodes, std::vector<double>& weights) {
  constexpr double pi = std::numbers::pi;
  const auto n = static_cast<std::size_t>(mesh);
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  if (rule == QuadRule::GaussLegendre) {
    if (mesh < 1) throw std::invalid_argument("Gauss-Legendre needs at least one node");
    gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(n);
    if (t == nullptr) throw std::runtime_error("Gauss-Legendre table allocation failed");
    for (std::size_t i = 0; i < n; ++i) gsl_integration_glfixed_point(-pi, pi, i, &nodes[i], &weights[i], t);
    gsl_integration_glfixed_table_free(t);
    return;
  }
  if (mesh < 2) throw std::invalid_argument("composite rules need at least two points");
  if (rule == QuadRule::Simpson && mesh % 2 == 0) {
    throw std::invalid_argument("Simpson's rule needs an odd number of points");
  }
  const double step = 2.0 * pi / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = -pi + step * static_cast<double>(i);
  if (rule == QuadRule::Trapezoid) {
    for (std::size_t i = 0; i < n; ++i) weights[i] = step;
    weights.front() = weights.back() = 0.5 * step;
  } else {
    for (std::size_t i = 0; i < n; ++i) weights[i] = step / 3.0 * (i % 2 == 1 ? 4.0 : 2.0);
    weights.front() = weights.back() = step / 3.0;
  }
}

int coarse_mesh(QuadRule rule, int mesh) {
  if (rule == QuadRule::GaussLegendre) return std::max(1, mesh / 2);
  int coarse = (mesh - 1) / 2 + 1;
  if (rule == QuadRule::Simpson && coarse % 2 == 0) --coarse;
  return std::max(coarse, rule == QuadRule::Simpson ? 3 : 2);
}

struct GreenIntegral::Level {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<cplx> inv_sigma;

  Level(QuadRule rule, int mesh, cplx k2) {
    axis_rule(rule, mesh, nodes, weights);
    const std::size_t n = nodes.size();
    inv_sigma.resize(n * n);
    const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t a = 0; a < rows; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        inv_sigma[static_cast<std::size_t>(a) * n + b] =
            1.0 / sigma(nodes[static_cast<std::size_t>(a)], nodes[b], k2);
      }
    }
  }

  cplx integrate(LatticeIndex x, Backend backend) const {
    const kernels::QuadGrid grid{nodes.data(), weights.data(), nodes.size(), inv_sigma.data()};
    const cplx raw = backend == Backend::Serial ? kernels::serial::quad_sum(grid, x.x1, x.x2)
                                                : kernels::parallel::quad_sum(grid, x.x1, x.x2);
    return raw / (4.0 * std::numbers::pi * std::numbers::pi);
  }
};

GreenIntegral::GreenIntegral(cplx k2, const QuadratureSpec& spec, Backend backend)
    : spec_(spec), backend_(backend) {
  if (!(spec.epsilon > 0.0)) throw DomainError("quadrature epsilon must be positive");
  if (!(spec.tolerance > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const cplx shifted = k2 + cplx(0.0, spec.epsilon);
  fine_ = std::make_unique<Level>(spec.rule, spec.mesh, shifted);
  coarse_ = std::make_unique<Level>(spec.rule, coarse_mesh(spec.rule, spec.mesh), shifted);
}

GreenIntegral::~GreenIntegral() = default;
GreenIntegral::GreenIntegral(GreenIntegral&&) noexcept = default;
GreenIntegral& GreenIntegral::operator=(GreenIntegral&&) noexcept = default;

QuadratureResult GreenIntegral::evaluate(LatticeIndex x) const {
  if (manhattan(x) > kOracleMaxDistance) {
    throw DomainError("oracle points must satisfy |x1| + |x2| <= " +
                      std::to_string(kOracleMaxDistance));
  }
  const cplx fine = fine_->integrate(x, backend_);
  const cplx coarse = coarse_->integrate(x, backend_);
  double divisor = 1.0;
  if (spec_.rule == QuadRule::Trapezoid) divisor = 3.0;
  if (spec_.rule == QuadRule::Simpson) divisor = 15.0;
  const double estimate = std::abs(fine - coarse) / divisor;
  return {fine, estimate, estimate > spec_.tolerance * std::abs(fine)};
}

QuadratureResult green_integral(LatticeIndex x, cplx k2, const QuadratureSpec& spec) {
  return GreenIntegral(k2, spec).evaluate(x);
}

}  // namespace trigreen
