#include "trigreen/lattice.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "trigreen/errors.hpp"

namespace trigreen {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lattice index overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("lattice index overflow");
  return r;
}

std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_sub(0, a) : a; }

std::string describe(LatticeIndex x) {
  std::ostringstream os;
  os << "(" << x.x1 << "," << x.x2 << ")";
  return os.str();
}

}  // namespace

LatticeIndex operator+(LatticeIndex a, LatticeIndex b) {
  return {checked_add(a.x1, b.x1), checked_add(a.x2, b.x2)};
}

LatticeIndex operator-(LatticeIndex a, LatticeIndex b) {
  return {checked_sub(a.x1, b.x1), checked_sub(a.x2, b.x2)};
}

LatticeIndex operator-(LatticeIndex a) { return {checked_sub(0, a.x1), checked_sub(0, a.x2)}; }

std::int64_t manhattan(LatticeIndex x) { return checked_add(checked_abs(x.x1), checked_abs(x.x2)); }

LatticeIndex direction(int j) {
  if (j < 1 || j > 6) throw DomainError("direction index must lie in 1..6");
  return kDirections[static_cast<std::size_t>(j - 1)];
}

CartesianPoint to_cartesian(LatticeIndex x) {
  const auto x1 = static_cast<double>(x.x1);
  const auto x2 = static_cast<double>(x.x2);
  return {x1 + 0.5 * x2, 0.5 * std::numbers::sqrt3 * x2};
}

std::array<LatticeIndex, 6> neighbors(LatticeIndex x) {
  std::array<LatticeIndex, 6> out;
  for (std::size_t j = 0; j < 6; ++j) out[j] = x + kDirections[j];
  return out;
}

Wavenumber::Wavenumber(double k, double epsilon) : k_(k), epsilon_(epsilon) {
  if (!(k > 0.0) || !(k < 2.0 * std::numbers::sqrt2)) {
    throw DomainError("wavenumber k must lie in (0, 2*sqrt(2))");
  }
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("absorption shift epsilon must be a finite nonnegative number");
  }
}

bool Wavenumber::degenerate() const noexcept { return std::abs(k_ * k_ - 4.0) < 1e-12; }

cplx apply_laplacian(const LatticeField& u, LatticeIndex x) {
  cplx sum = 0.0;
  for (const auto& e : kDirections) sum += u(x + e);
  return sum - 6.0 * u(x);
}

cplx apply_helmholtz(const LatticeField& u, LatticeIndex x, cplx k2) {
  cplx sum = 0.0;
  for (const auto& e : kDirections) sum += u(x + e);
  const cplx centre = u(x);
  return sum - 6.0 * centre + k2 * centre;
}

cplx apply_helmholtz(const LatticeField& u, LatticeIndex x, const Wavenumber& k) {
  return apply_helmholtz(u, x, k.k2());
}

double dispersion(double xi1, double xi2) {
  const double a = std::sin(0.5 * xi1);
  const double b = std::sin(0.5 * xi2);
  const double c = std::sin(0.5 * (xi1 - xi2));
  return 4.0 * (a * a + b * b + c * c);
}

// ---------------------------------------------------------------------------
// Region

Region::Region(std::set<LatticeIndex> interior, std::set<LatticeIndex> boundary)
    : interior_(std::move(interior)), boundary_(std::move(boundary)) {
  for (const auto& y : boundary_) {
    unsigned mask = 0;
    for (int j = 1; j <= 6; ++j) {
      if (interior_.contains(y - direction(j))) mask |= 1u << (j - 1);
    }
    side_mask_.emplace(y, mask);
  }
}

Region Region::from_parts(std::set<LatticeIndex> interior, std::set<LatticeIndex> boundary) {
  if (interior.empty()) throw DomainError("region interior must be nonempty");
  if (boundary.empty()) throw DomainError("region boundary must be nonempty");
  for (const auto& x : interior) {
    if (boundary.contains(x)) {
      throw DomainError("site " + describe(x) + " is both interior and boundary");
    }
  }
  for (const auto& x : interior) {
    for (const auto& v : neighbors(x)) {
      if (!interior.contains(v) && !boundary.contains(v)) {
        throw DomainError("interior site " + describe(x) + " has neighbour " + describe(v) +
                          " outside the region");
      }
    }
  }
  Region region(std::move(interior), std::move(boundary));
  for (const auto& [y, mask] : region.side_mask_) {
    if (mask == 0) {
      throw DomainError("boundary site " + describe(y) + " has no interior neighbour");
    }
  }
  return region;
}

Region Region::from_points(const std::set<LatticeIndex>& points) {
  std::set<LatticeIndex> interior;
  std::set<LatticeIndex> boundary;
  for (const auto& x : points) {
    bool full = true;
    for (const auto& v : neighbors(x)) {
      if (!points.contains(v)) {
        full = false;
        break;
      }
    }
    (full ? interior : boundary).insert(x);
  }
  return from_parts(std::move(interior), std::move(boundary));
}

std::set<LatticeIndex> Region::points() const {
  std::set<LatticeIndex> all = interior_;
  all.insert(boundary_.begin(), boundary_.end());
  return all;
}

int Region::side_of(LatticeIndex y) const {
  const auto it = side_mask_.find(y);
  if (it == side_mask_.end()) throw DomainError(describe(y) + " is not a boundary site");
  for (int j = 1; j <= 6; ++j) {
    if (it->second & (1u << (j - 1))) return j;
  }
  throw DomainError(describe(y) + " has no interior neighbour");
}

std::vector<int> Region::sides_of(LatticeIndex y) const {
  const auto it = side_mask_.find(y);
  if (it == side_mask_.end()) throw DomainError(describe(y) + " is not a boundary site");
  std::vector<int> sides;
  for (int j = 1; j <= 6; ++j) {
    if (it->second & (1u << (j - 1))) sides.push_back(j);
  }
  return sides;
}

Region hex_shell(int n) {
  if (n < 0) throw DomainError("hex_shell needs N >= 0");
  std::set<LatticeIndex> inner{{0, 0}};
  if (n == 0) return Region(inner, {});
  std::set<LatticeIndex> outer = inner;
  for (int level = 1; level <= n; ++level) {
    inner = outer;
    for (const auto& x : inner) {
      for (const auto& v : neighbors(x)) outer.insert(v);
    }
  }
  std::set<LatticeIndex> boundary;
  for (const auto& x : outer) {
    if (!inner.contains(x)) boundary.insert(x);
  }
  return Region(std::move(inner), std::move(boundary));
}

// ---------------------------------------------------------------------------
// Normal differences and Green's identities

cplx normal_difference(const LatticeField& u, LatticeIndex y, const Region& region) {
  return normal_difference(u, y, region, region.side_of(y));
}

cplx normal_difference(const LatticeField& u, LatticeIndex y, const Region& region, int side) {
  const LatticeIndex inner = y - direction(side);
  if (!region.is_boundary(y) || !region.is_interior(inner)) {
    throw DomainError(describe(y) + " is not on side " + std::to_string(side));
  }
  return u(y) - u(inner);
}

cplx total_normal_difference(const LatticeField& u, LatticeIndex y, const Region& region) {
  cplx sum = 0.0;
  const cplx centre = u(y);
  for (int j : region.sides_of(y)) sum += centre - u(y - direction(j));
  return sum;
}

GreenIdentityResiduals green_identity_residuals(const LatticeField& u, const LatticeField& v,
                                                const Region& region) {
  std::set<LatticeIndex> covered;
  for (const auto& x : region.interior()) {
    covered.insert(x);
    for (const auto& w : neighbors(x)) covered.insert(w);
  }
  if (covered != region.points()) {
    throw DomainError("region is not the union of the neighbourhoods of its interior");
  }

  cplx lhs1 = 0.0;
  cplx lhs2 = 0.0;
  for (const auto& x : region.interior()) {
    const cplx ux = u(x);
    const cplx vx = v(x);
    cplx grad = 0.0;
    cplx lap_u = -6.0 * ux;
    cplx lap_v = -6.0 * vx;
    for (const auto& e : kDirections) {
      const cplx un = u(x + e);
      const cplx vn = v(x + e);
      grad += (un - ux) * (vn - vx);
      lap_u += un;
      lap_v += vn;
    }
    lhs1 += 0.5 * grad + ux * lap_v;
    lhs2 += ux * lap_v - vx * lap_u;
  }

  cplx rhs1 = 0.0;
  cplx rhs2 = 0.0;
  for (const auto& y : region.boundary()) {
    const cplx uy = u(y);
    const cplx vy = v(y);
    for (int j : region.sides_of(y)) {
      const LatticeIndex inner = y - direction(j);
      const cplx ui = u(inner);
      const cplx vi = v(inner);
      rhs1 += 0.5 * (uy + ui) * (vy - vi);
      rhs2 += uy * (vy - vi) - vy * (uy - ui);
    }
  }
  return {lhs1 - rhs1, lhs2 - rhs2};
}

}  // namespace trigreen
