#pragma once

// Geometry and discrete calculus of the triangular lattice in Z^2 index
// coordinates. Site (x1, x2) sits at (x1 + x2/2, x2*sqrt(3)/2) in the plane.

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace trigreen {

using cplx = std::complex<double>;

struct LatticeIndex {
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;

  friend constexpr auto operator<=>(const LatticeIndex&, const LatticeIndex&) = default;
};

// Checked arithmetic: overflow throws std::overflow_error.
LatticeIndex operator+(LatticeIndex a, LatticeIndex b);
LatticeIndex operator-(LatticeIndex a, LatticeIndex b);
LatticeIndex operator-(LatticeIndex a);

/// |x1| + |x2|, checked.
std::int64_t manhattan(LatticeIndex x);

/// Unit steps e1..e6 stored at positions 0..5:
/// e1 = (1,0), e2 = (0,1), e3 = e1 - e2, e4 = -e1, e5 = -e2, e6 = -e3.
inline constexpr std::array<LatticeIndex, 6> kDirections{
    {{1, 0}, {0, 1}, {1, -1}, {-1, 0}, {0, -1}, {-1, 1}}};

/// e_j for j in 1..6.
LatticeIndex direction(int j);

struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;
};

CartesianPoint to_cartesian(LatticeIndex x);

/// The six neighbours in the order x+e1, ..., x+e6.
std::array<LatticeIndex, 6> neighbors(LatticeIndex x);

/// Wavenumber k in (0, 2*sqrt(2)) with an optional absorption shift:
/// the operator uses k~^2 = k^2 + i*epsilon.
class Wavenumber {
 public:
  explicit Wavenumber(double k, double epsilon = 0.0);

  double k() const noexcept { return k_; }
  double epsilon() const noexcept { return epsilon_; }
  cplx k2() const noexcept { return {k_ * k_, epsilon_}; }

  /// k = 2 makes every gamma_n singular, so the zero closing guess fails there.
  bool degenerate() const noexcept;

 private:
  double k_;
  double epsilon_;
};

using LatticeField = std::function<cplx(LatticeIndex)>;

/// Sum of the six neighbour values minus six times the centre value.
cplx apply_laplacian(const LatticeField& u, LatticeIndex x);

/// (Delta_d + k2) u evaluated at x.
cplx apply_helmholtz(const LatticeField& u, LatticeIndex x, cplx k2);
cplx apply_helmholtz(const LatticeField& u, LatticeIndex x, const Wavenumber& k);

/// 4 (sin^2(xi1/2) + sin^2(xi2/2) + sin^2((xi1-xi2)/2)); lies in [0, 9].
double dispersion(double xi1, double xi2);

/// A finite region split into interior and boundary sites.
///
/// Conditions enforced by the factories: interior and boundary are disjoint
/// and nonempty, every interior site has its full 7-point neighbourhood in
/// the region, and every boundary site touches the interior. A boundary site
/// y belongs to side j whenever y - e_j is interior.
class Region {
 public:
  /// interior = sites whose neighbourhood lies in `points`; boundary = the rest.
  static Region from_points(const std::set<LatticeIndex>& points);
  static Region from_parts(std::set<LatticeIndex> interior, std::set<LatticeIndex> boundary);

  const std::set<LatticeIndex>& interior() const noexcept { return interior_; }
  const std::set<LatticeIndex>& boundary() const noexcept { return boundary_; }
  std::set<LatticeIndex> points() const;
  std::size_t size() const noexcept { return interior_.size() + boundary_.size(); }

  bool is_interior(LatticeIndex x) const { return interior_.contains(x); }
  bool is_boundary(LatticeIndex x) const { return boundary_.contains(x); }
  bool contains(LatticeIndex x) const { return is_interior(x) || is_boundary(x); }

  /// Smallest j with y - e_j interior.
  int side_of(LatticeIndex y) const;
  /// Every j with y - e_j interior, ascending.
  std::vector<int> sides_of(LatticeIndex y) const;

 private:
  friend Region hex_shell(int n);
  Region(std::set<LatticeIndex> interior, std::set<LatticeIndex> boundary);

  std::set<LatticeIndex> interior_;
  std::set<LatticeIndex> boundary_;
  std::map<LatticeIndex, unsigned> side_mask_;
};

/// H_N: H_0 = {0}, H_N = union of F_x over H_{N-1}; interior H_{N-1}.
/// H_0 is the recurrence base (one interior site, empty boundary) and is not
/// a region in the sense of the class invariants.
Region hex_shell(int n);

/// u(y) - u(y - e_j) with j = R.side_of(y).
cplx normal_difference(const LatticeField& u, LatticeIndex y, const Region& region);
/// u(y) - u(y - e_j) for an explicit side j; y must lie on that side.
cplx normal_difference(const LatticeField& u, LatticeIndex y, const Region& region, int side);
/// Sum of u(y) - u(y - e_j) over all sides j containing y.
cplx total_normal_difference(const LatticeField& u, LatticeIndex y, const Region& region);

struct GreenIdentityResiduals {
  cplx first;
  cplx second;
};

/// LHS - RHS of the discrete first and second Green identities on `region`,
/// which must equal the union of the neighbourhoods of its interior.
///
/// First:  sum_int [ (grad+ u . grad+ v + grad- u . grad- v)/2 + u Lap v ]
///           = sum_bdry sum_sides (u(y) + u(y - e_j))/2 * T_j v(y)
/// Second: sum_int (u Lap v - v Lap u) = sum_bdry sum_sides (u T_j v - v T_j u)
GreenIdentityResiduals green_identity_residuals(const LatticeField& u, const LatticeField& v,
                                                const Region& region);

}  // namespace trigreen
