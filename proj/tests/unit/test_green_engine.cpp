#include <doctest.h>

#include <cmath>
#include <random>

#include "literal_assembly.hpp"
#include "reference.hpp"
#include "trigreen/errors.hpp"
#include "trigreen/green_engine.hpp"

using namespace trigreen;

namespace {

bool dense_equal(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.entries() == b.entries();
}

bool triplets_distinct(const SparseTriplets& s) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& t : s.triplets) {
    if (t.row < 1 || t.row > s.rows || t.col < 1 || t.col > s.cols) return false;
    if (!seen.insert({t.row, t.col}).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("even assembly examples") {
  const auto s1 = assemble_even(1, 2.25);
  CHECK(s1.alpha.rows == 2);
  CHECK(s1.alpha.cols == 1);
  CHECK(s1.alpha.nnz() == 2);
  CHECK(s1.alpha.dense()(0, 0) == cplx(1.0));
  CHECK(s1.alpha.dense()(1, 0) == cplx(2.0));

  const auto g4 = assemble_even(2, 4.0).gamma.dense();
  for (std::size_t i = 0; i < 3; ++i) CHECK(g4(i, i) == cplx(2.0));
  CHECK(g4(0, 1) == cplx(-2.0));
  CHECK(g4(2, 1) == cplx(-2.0));
  CHECK(g4(1, 0) == cplx(-1.0));
  CHECK(g4(1, 2) == cplx(-1.0));
  CHECK(assemble_even(2, 4.0).gamma.nnz() == 7);

  CHECK(assemble_even(3, 1.0).beta.nnz() == 7);
  CHECK_THROWS_AS(assemble_even(0, 1.0), DomainError);
}

TEST_CASE("odd assembly examples") {
  const auto s0 = assemble_odd(0, 4.0);
  CHECK(s0.gamma.rows == 1);
  CHECK(s0.gamma.dense()(0, 0) == cplx(0.0));

  const auto b3 = assemble_odd(1, 2.0).beta;
  CHECK(b3.rows == 2);
  CHECK(b3.cols == 3);
  CHECK(b3.nnz() == 4);
  CHECK(b3.dense()(0, 0) == cplx(1.0));
  CHECK(b3.dense()(0, 1) == cplx(2.0));

  CHECK(assemble_odd(2, 2.0).gamma.nnz() == 7);
}

TEST_CASE("assembly matches the table of sizes and the literal transcription") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> re(0.1, 7.9);
  std::uniform_real_distribution<double> im(0.0, 0.5);
  for (int trial = 0; trial < 5; ++trial) {
    const cplx k2(re(rng), im(rng));
    for (int p = 1; p <= 50; ++p) {
      const auto q = static_cast<std::size_t>(p);
      const auto e = assemble_even(p, k2);
      CHECK(e.alpha.rows == q + 1);
      CHECK(e.alpha.cols == q);
      CHECK(e.alpha.nnz() == 2 * q);
      CHECK(e.beta.rows == q + 1);
      CHECK(e.beta.cols == q + 1);
      CHECK(e.beta.nnz() == 2 * q + 1);
      CHECK(e.gamma.rows == q + 1);
      CHECK(e.gamma.cols == q + 1);
      CHECK(e.gamma.nnz() == 3 * q + 1);
      CHECK(triplets_distinct(e.alpha));
      CHECK(triplets_distinct(e.beta));
      CHECK(triplets_distinct(e.gamma));
      CHECK(dense_equal(e.alpha.dense(), literal::alpha2(p, k2)));
      CHECK(dense_equal(e.beta.dense(), literal::beta2(p, k2)));
      CHECK(dense_equal(e.gamma.dense(), literal::gamma2(p, k2)));

      const auto o = assemble_odd(p, k2);
      CHECK(o.alpha.rows == q + 1);
      CHECK(o.alpha.cols == q + 1);
      CHECK(o.alpha.nnz() == 2 * q + 1);
      CHECK(o.beta.rows == q + 1);
      CHECK(o.beta.cols == q + 2);
      CHECK(o.beta.nnz() == 2 * q + 2);
      CHECK(o.gamma.rows == q + 1);
      CHECK(o.gamma.cols == q + 1);
      CHECK(o.gamma.nnz() == 3 * q + 1);
      CHECK(triplets_distinct(o.alpha));
      CHECK(triplets_distinct(o.beta));
      CHECK(triplets_distinct(o.gamma));
      CHECK(dense_equal(o.alpha.dense(), literal::alpha1(p, k2)));
      CHECK(dense_equal(o.beta.dense(), literal::beta1(p, k2)));
      CHECK(dense_equal(o.gamma.dense(), literal::gamma1(p, k2)));
    }
    CHECK(dense_equal(assemble_odd(0, k2).gamma.dense(), literal::gamma1(0, k2)));
  }
}

TEST_CASE("shell matrices encode the Helmholtz equation on the wedge") {
  // Build an arbitrary symmetric lattice function from canonical values and
  // check gamma V_n - alpha V_{n-1} - beta V_{n+1} equals the negated stencil
  // sum on shell n.
  std::mt19937_64 rng(8);
  std::map<LatticeIndex, cplx> canon;
  for (int d = 0; d <= 12; ++d) {
    for (int j = 0; 2 * j <= d; ++j) canon[{d - j, j}] = ref::random_complex(rng);
  }
  const LatticeField g = [&](LatticeIndex x) { return canon.at(canonicalize(x)); };
  const auto shell = [&](int n) {
    std::vector<cplx> v;
    for (int j = 0; 2 * j <= n; ++j) v.push_back(canon.at({n - j, j}));
    return v;
  };
  const cplx k2(2.3, 0.1);
  for (int n = 1; n <= 10; ++n) {
    const auto m = assemble_shell(n, k2);
    const auto lhs = m.gamma.dense() * shell(n);
    const auto a = m.alpha.dense() * shell(n - 1);
    const auto b = m.beta.dense() * shell(n + 1);
    for (std::size_t l = 0; l < lhs.size(); ++l) {
      const LatticeIndex x{n - static_cast<std::int64_t>(l), static_cast<std::int64_t>(l)};
      const cplx equation = apply_helmholtz(g, x, k2);
      CHECK(std::abs((a[l] + b[l] - lhs[l]) - equation) < 1e-12);
    }
  }
}

TEST_CASE("canonicalize examples and orbit invariance") {
  CHECK(canonicalize({-3, -2}) == LatticeIndex{3, 2});
  CHECK(canonicalize({1, 2}) == LatticeIndex{2, 1});
  CHECK(canonicalize({2, -1}) == LatticeIndex{1, 1});

  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<int> d(-60, 60);
  for (int t = 0; t < 1000; ++t) {
    const LatticeIndex x{d(rng), d(rng)};
    const LatticeIndex c = canonicalize(x);
    CHECK(c.x1 >= c.x2);
    CHECK(c.x2 >= 0);
    CHECK(canonicalize(c) == c);
    for (const LatticeIndex y : {LatticeIndex{x.x2, x.x1}, LatticeIndex{-x.x1, -x.x2},
                                 LatticeIndex{x.x1 + x.x2, -x.x2}}) {
      CHECK(canonicalize(y) == c);
    }
    std::int64_t least = manhattan(x);
    for (const auto& z : ref::orbit(x)) least = std::min(least, manhattan(z));
    CHECK(c.x1 + c.x2 == least);
    CHECK(ref::orbit(x).contains(c));
  }
  for (int t = 0; t < 50; ++t) {
    const LatticeIndex x{d(rng) / 4, d(rng) / 4};
    CHECK(lattice_distance(x) == ref::bfs_distance(x));
  }
}

TEST_CASE("closing guesses") {
  SUBCASE("zero") {
    const auto [g, a] = make_guess(GuessKind::Zero, Wavenumber(1.5), 9);
    CHECK(a.rows() == 6);
    CHECK(a.cols() == 5);
    CHECK(a.max_abs() == 0.0);
  }
  SUBCASE("shift at k = 2") {
    const double eps = 1e-6;
    const auto [g, a] = make_guess(GuessKind::Shift, Wavenumber(2.0, eps), 9);
    const cplx expect(0.0, (std::sqrt(eps * eps + 16.0) - eps) / 4.0);
    CHECK(std::abs(g.lambda - expect) < 1e-15);
    CHECK(std::abs(g.lambda) < 1.0);
    // The other root of 2 l^2 + i eps l + 2 = 0 lies outside the unit circle.
    const cplx other = cplx(1.0) / g.lambda;
    CHECK(std::abs(2.0 * other * other + cplx(0.0, eps) * other + 2.0) < 1e-9);
    CHECK(std::abs(other) > 1.0);
    CHECK(a(0, 0) == g.lambda);
    CHECK(a(5, 4) == g.lambda);
    CHECK(a(2, 2) == 0.5 * g.lambda);
    CHECK(a(2, 1) == 0.5 * g.lambda);
  }
  SUBCASE("shift without epsilon is inadmissible") {
    CHECK_THROWS_AS(make_guess(GuessKind::Shift, Wavenumber(2.0), 9), GuessInadmissible);
  }
  SUBCASE("heuristic at k^2 = 6") {
    const int p = 1136;
    const auto [g, a] = make_guess(GuessKind::Heuristic, Wavenumber(std::sqrt(6.0)), 2 * p - 1);
    CHECK(std::abs(std::abs(g.lambda) - std::sqrt((2.0 * p + 1) / (2.0 * p - 1))) < 1e-9);
    CHECK(std::abs(g.lambda) * 2.0 * p / (2.0 * p + 1) * std::abs(g.h) < 1.0);
    CHECK(g.lambda.imag() > 0.0);
  }
  SUBCASE("heuristic entries") {
    const int p = 5;
    const auto [g, a] = make_guess(GuessKind::Heuristic, Wavenumber(2.0), 2 * p - 1);
    const cplx rho = g.lambda / g.h;
    CHECK(std::abs(a(0, 0) - (2.0 * p - 1) / (2.0 * p) * rho) < 1e-15);
    CHECK(std::abs(a(3, 3) - (2.0 * p - 1) / (4.0 * p) * rho) < 1e-15);
    CHECK(std::abs(a(3, 2) - (2.0 * p - 1) / (4.0 * p) * rho) < 1e-15);
    const cplx h = g.h;
    const cplx l = g.lambda;
    const cplx poly = 4.0 * p / (2.0 * p + 1) * h * l * l + (4.0 - 6.0 + 2.0 * h) * l +
                      4.0 * p / (2.0 * p - 1) * h;
    CHECK(std::abs(poly) < 1e-12);
  }
  SUBCASE("heuristic with |h| below the lower bound") {
    CHECK_THROWS_AS(make_guess(GuessKind::Heuristic, Wavenumber(0.5), 9, cplx(0.1)),
                    GuessInadmissible);
  }
  SUBCASE("even truncation is rejected") {
    CHECK_THROWS_AS(make_guess(GuessKind::Zero, Wavenumber(1.5), 10), GuessInadmissible);
  }
}

TEST_CASE("table storage layout") {
  CHECK(GreenTable::entry_count(0) == 1);
  CHECK(GreenTable::entry_count(1) == 2);
  CHECK(GreenTable::entry_count(2) == 4);
  CHECK(GreenTable::entry_count(40) == 441);
  std::size_t expect = 0;
  for (int d = 0; d <= 9; ++d) {
    for (int j = 0; 2 * j <= d; ++j) CHECK(GreenTable::offset(d - j, j) == expect++);
  }
}

TEST_CASE("built tables satisfy the defining equation") {
  const GreenTable t = build_table(Wavenumber(1.5), 141, 30, GuessKind::Zero);
  CHECK(std::isfinite(std::abs(t.at(0, 0))));
  CHECK(defining_residual(t) < 1e-8);
  const cplx k2 = t.wavenumber().k2();
  CHECK(std::abs(6.0 * t.at(1, 0) - (6.0 - k2) * t.at(0, 0) - 1.0) < 1e-8);

  const GreenTable s = build_table(Wavenumber(2.0, 1e-6), 141, 20, GuessKind::Shift);
  CHECK(defining_residual(s) < 1e-8);
  const auto chain = [&] {
    auto [g, a] = make_guess(GuessKind::Shift, Wavenumber(2.0, 1e-6), 141);
    return backward_chain(Wavenumber(2.0, 1e-6), 141, 1, a, g);
  }();
  REQUIRE(chain.size() == 1);
  const cplx a1 = chain[0](0, 0);
  CHECK(std::abs(s.at(0, 0) - 1.0 / (6.0 * a1 - 6.0 + cplx(4.0, 1e-6))) < 1e-14);
  CHECK(std::abs(s.at(1, 0) - a1 * s.at(0, 0)) < 1e-14);
}

TEST_CASE("green lookups use the symmetry group") {
  const GreenTable t = build_table(Wavenumber(1.5), 41, 10, GuessKind::Zero);
  CHECK(green(t, {-1, 0}) == green(t, {1, 0}));
  CHECK(green(t, {2, -1}) == green(t, {1, 1}));
  CHECK(green(t, {-4, 7}) == ref::orbit_green(t, {-4, 7}));
  try {
    green(t, {11, 0});
    FAIL("expected RadiusExceeded");
  } catch (const RadiusExceeded& e) {
    CHECK(e.required() == 11);
    CHECK(e.available() == 10);
  }
}

TEST_CASE("serial and parallel chains produce the same table") {
  const GreenTable a = build_table(Wavenumber(2.0, 1e-6), 101, 20, GuessKind::Shift, std::nullopt, Backend::Serial);
  const GreenTable b = build_table(Wavenumber(2.0, 1e-6), 101, 20, GuessKind::Shift, std::nullopt, Backend::Parallel);
  CHECK(max_table_difference(a, b, 20) < 1e-12);
}

TEST_CASE("zero guess at k = 2 fails on a singular shell") {
  try {
    build_table(Wavenumber(2.0), 141, 10, GuessKind::Zero);
    FAIL("expected EngineError");
  } catch (const EngineError& e) {
    CHECK(e.shell() >= 1);
    CHECK(std::string(e.what()).find("degenerate") != std::string::npos);
  }
}

TEST_CASE("zero guess at real k gives a real table that does not settle in N") {
  // Without absorption every shell matrix is real, so the zero closing guess
  // returns a real standing-wave solution whose values jump with N.
  const GreenTable a = build_table(Wavenumber(1.5), 141, 20, GuessKind::Zero);
  const GreenTable b = build_table(Wavenumber(1.5), 283, 20, GuessKind::Zero);
  for (const auto& v : b.values()) CHECK(v.imag() == 0.0);
  CHECK(defining_residual(b) < 1e-8);
  CHECK(max_table_difference(a, b, 20) > 1e-2);
  const GreenTable h = build_table(Wavenumber(1.5), 283, 20, GuessKind::Heuristic);
  CHECK(max_table_difference(b, h, 20) > 1e-2);
}

TEST_CASE("absorbing and heuristic closings agree at k = 1.5") {
  const GreenTable s = build_table(Wavenumber(1.5, 1e-6), 283, 20, GuessKind::Shift);
  const GreenTable h = build_table(Wavenumber(1.5), 283, 20, GuessKind::Heuristic);
  CHECK(max_table_difference(s, h, 20) < 1e-3);
}

TEST_CASE("truncation differences shrink") {
  const GreenTable a = build_table(Wavenumber(1.5, 1e-6), 35, 17, GuessKind::Shift);
  const GreenTable b = build_table(Wavenumber(1.5, 1e-6), 71, 17, GuessKind::Shift);
  const GreenTable c = build_table(Wavenumber(1.5, 1e-6), 143, 17, GuessKind::Shift);
  CHECK(max_table_difference(b, c, 17) < max_table_difference(a, b, 17));
}
