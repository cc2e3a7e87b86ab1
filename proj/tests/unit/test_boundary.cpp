#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "reference.hpp"
#include "trigreen/boundary.hpp"
#include "trigreen/errors.hpp"
#include "trigreen/green_engine.hpp"

using namespace trigreen;

namespace {

const GreenTable& absorbing_table() {
  static const GreenTable t = build_table(Wavenumber(1.5, 1e-2), 63, 24, GuessKind::Shift);
  return t;
}

const GreenTable& example_table() {
  static const GreenTable t = build_table(Wavenumber(2.0, 1e-6), 283, 100, GuessKind::Shift);
  return t;
}

LatticeField constant(cplx c) {
  return [c](LatticeIndex) { return c; };
}

}  // namespace

TEST_CASE("single layer basics") {
  const auto& t = absorbing_table();
  const Region h3 = hex_shell(3);
  CHECK(single_layer(constant(0.0), {1, 1}, t, h3) == cplx(0.0));

  const Region h1 = hex_shell(1);
  const LatticeIndex y0{1, 0};
  const LatticeField spike = [&](LatticeIndex y) { return y == y0 ? cplx(1.0) : cplx(0.0); };
  for (const LatticeIndex x : {LatticeIndex{0, 0}, LatticeIndex{3, -1}, LatticeIndex{-2, 5}}) {
    CHECK(single_layer(spike, x, t, h1) == green(t, x - y0));
  }
  CHECK_THROWS_AS(single_layer(constant(1.0), {30, 0}, t, h3), RadiusExceeded);
}

TEST_CASE("both potentials solve the equation inside a larger hexagon") {
  const auto& t = absorbing_table();
  const cplx k2 = t.wavenumber().k2();
  const Region h3 = hex_shell(3);
  const Region h6 = hex_shell(6);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const LatticeField phi = ref::random_field(rng, h3.boundary());
    const LatticeField v = [&](LatticeIndex x) { return single_layer(phi, x, t, h3); };
    const LatticeField w = [&](LatticeIndex x) { return double_layer_all_sides(phi, x, t, h3); };
    double worst_v = 0.0;
    double worst_w = 0.0;
    for (const auto& x : h6.interior()) {
      if (h3.is_boundary(x)) continue;
      worst_v = std::max(worst_v, std::abs(apply_helmholtz(v, x, k2)));
      if (h3.is_interior(x)) worst_w = std::max(worst_w, std::abs(apply_helmholtz(w, x, k2)));
    }
    CHECK(worst_v < 1e-9);
    CHECK(worst_w < 1e-9);
  }
}

TEST_CASE("one-side double layer misses the corner cancellation") {
  const auto& t = absorbing_table();
  const Region h3 = hex_shell(3);
  const LatticeField w = [&](LatticeIndex x) { return double_layer(constant(1.0), x, t, h3); };
  double worst = 0.0;
  for (const auto& x : h3.interior()) {
    worst = std::max(worst, std::abs(apply_helmholtz(w, x, t.wavenumber().k2())));
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("double layer matches a literal sum") {
  const auto& t = absorbing_table();
  const Region h3 = hex_shell(3);
  const LatticeField one = constant(1.0);
  CHECK(double_layer(constant(0.0), {0, 0}, t, h3) == cplx(0.0));
  for (const auto& x : hex_shell(5).points()) {
    CHECK(std::abs(double_layer(one, x, t, h3) - ref::literal_double_layer(one, x, t, h3, false)) <
          1e-12);
    CHECK(std::abs(double_layer_all_sides(one, x, t, h3) -
                   ref::literal_double_layer(one, x, t, h3, true)) < 1e-12);
  }
}

TEST_CASE("representation formula for a plane wave") {
  const double xi1 = 0.7;
  const double xi2 = 0.2;
  const double k = std::sqrt(dispersion(xi1, xi2));
  const GreenTable t = build_table(Wavenumber(k), 63, 24, GuessKind::Zero);
  const LatticeField u = ref::plane_wave(xi1, xi2);
  for (int n : {4, 5}) {
    const Region r = hex_shell(n);
    CHECK(helmholtz_residual(u, r, t.wavenumber().k2()) < 1e-12);
    CHECK(representation_check(u, r, t) < 1e-8);
  }
}

TEST_CASE("representation formula for a shifted Green's function") {
  const auto& t = absorbing_table();
  for (const LatticeIndex z : {LatticeIndex{9, 0}, LatticeIndex{-3, 7}}) {
    const LatticeField u = [&](LatticeIndex x) { return green(t, x - z); };
    for (int n : {4, 5}) {
      const Region r = hex_shell(n);
      CHECK(helmholtz_residual(u, r, t.wavenumber().k2()) < 1e-12);
      CHECK(representation_check(u, r, t) < 1e-8);
    }
  }
  CHECK(representation_check(constant(0.0), hex_shell(4), t) == 0.0);
}

TEST_CASE("representation fails when the pole is inside") {
  const auto& t = absorbing_table();
  const LatticeField u = [&](LatticeIndex x) { return green(t, x); };
  CHECK(helmholtz_residual(u, hex_shell(4), t.wavenumber().k2()) > 0.5);
}

TEST_CASE("boundary matrix for the two-segment example") {
  const auto& t = example_table();
  const BoundaryProblem p = preset_problem("example1-sym", t.wavenumber());
  const DenseMatrix h = assemble_H(p, t);
  REQUIRE(h.rows() == 4);
  const cplx g0 = green(t, {0, 0});
  const cplx g1 = green(t, {1, 0});
  const cplx g8 = green(t, {8, 0});
  const cplx g9 = green(t, {9, 0});
  const cplx g10 = green(t, {10, 0});
  const cplx expected[4][4] = {{g0, g1, g9, g10}, {g1, g0, g8, g9}, {g9, g8, g0, g1},
                               {g10, g9, g1, g0}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(h(i, j) == expected[i][j]);
      CHECK(h(i, j) == h(j, i));
    }
  }
  BoundaryProblem single;
  single.points = {{2, 3}};
  single.data = {1.0};
  single.k = t.wavenumber();
  const DenseMatrix h1 = assemble_H(single, t);
  REQUIRE(h1.rows() == 1);
  CHECK(h1(0, 0) == g0);

  BoundaryProblem far = single;
  far.points.push_back({200, 0});
  far.data.push_back(1.0);
  CHECK_THROWS_AS(assemble_H(far, t), RadiusExceeded);
}

TEST_CASE("problem validation") {
  BoundaryProblem p;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.points = {{0, 0}, {0, 0}};
  p.data = {1.0, 1.0};
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.points = {{0, 0}, {1, 0}};
  p.data = {1.0};
  CHECK_THROWS_AS(p.validate(), DomainError);
  CHECK_THROWS_AS(preset_problem("nope", Wavenumber(2.0)), DomainError);
}

TEST_CASE("density solves") {
  const auto& t = example_table();
  BoundaryProblem single;
  single.points = {{0, 0}};
  single.data = {1.0};
  single.k = t.wavenumber();
  const DensityVector d1 = solve_density(single, t);
  CHECK(std::abs(d1.phi[0] - 1.0 / green(t, {0, 0})) < 1e-14);

  const DensityVector sym = solve_density(preset_problem("example1-sym", t.wavenumber()), t);
  CHECK(std::abs(sym.phi[0] - sym.phi[3]) < 1e-9);
  CHECK(std::abs(sym.phi[1] - sym.phi[2]) < 1e-9);
  CHECK(sym.residual < 1e-10);

  const DensityVector skew = solve_density(preset_problem("example1-skew", t.wavenumber()), t);
  CHECK(std::abs(skew.phi[0] + skew.phi[3]) < 1e-9);
  CHECK(std::abs(skew.phi[1] + skew.phi[2]) < 1e-9);
  CHECK(skew.residual < 1e-10);
  CHECK(skew.cond2 >= 1.0);
}

TEST_CASE("field reproduces data on the boundary and keeps the mode symmetry") {
  const auto& t = example_table();
  for (const char* name : {"example1-sym", "example1-skew", "example2"}) {
    const BoundaryProblem p = preset_problem(name, t.wavenumber());
    const DensityVector d = solve_density(p, t);
    const Window line{-5, 5, -1, 1};
    const FieldGrid g = eval_field(p, d, t, line);
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      CHECK(std::abs(g.at(p.points[i]) - p.data[i]) < 1e-9);
      CHECK(g.boundary[g.index(p.points[i])] == 1);
    }
  }
  for (const auto [name, sign] : {std::pair{"example1-sym", 1.0}, std::pair{"example1-skew", -1.0}}) {
    const BoundaryProblem p = preset_problem(name, t.wavenumber());
    const DensityVector d = solve_density(p, t);
    const FieldGrid g = eval_field(p, d, t, Window{});
    double worst = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      const LatticeIndex x = g.point(i);
      worst = std::max(worst, std::abs(g.at(-x) - sign * g.at(x)));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("serial and parallel field evaluation agree") {
  const auto& t = absorbing_table();
  const BoundaryProblem p = preset_problem("example1-sym", t.wavenumber());
  const DensityVector d = solve_density(p, t);
  const Window w{-8, 8, -6, 6};
  const FieldGrid a = eval_field(p, d, t, w, Backend::Serial);
  const FieldGrid b = eval_field(p, d, t, w, Backend::Parallel);
  CHECK(a.values == b.values);
  CHECK_THROWS_AS(eval_field(p, d, t, Window{}), RadiusExceeded);
  CHECK(required_radius(p.points, w) >= 10);
}

TEST_CASE("decay diagnostic") {
  const auto& t = example_table();
  const FieldGrid g = green_field(t, Window{0, 100, 0, 0});
  const auto profile = decay_profile(g, 0.0, 50.0, 100.0);
  REQUIRE(profile.size() == 51);
  double lo = 1e300;
  double hi = 0.0;
  for (const auto& [r, m] : profile) {
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  CHECK(hi / lo < 3.0);

  FieldGrid zero;
  zero.window = Window{-10, 10, -10, 10};
  zero.values.assign(zero.window.width() * zero.window.height(), 0.0);
  zero.boundary.assign(zero.values.size(), 0);
  for (const auto& [r, m] : decay_profile(zero, std::numbers::pi / 2)) CHECK(m == 0.0);
  CHECK_THROWS_AS(decay_profile(zero, 0.0, 50.0, 60.0), DomainError);
}
