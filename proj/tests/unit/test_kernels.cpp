#include <doctest.h>

#include <numeric>
#include <random>

#include "reference.hpp"
#include "trigreen/dense_matrix.hpp"
#include "trigreen/kernels.hpp"
#include "trigreen/quadrature.hpp"

using namespace trigreen;

TEST_CASE("serial and parallel LU agree") {
  std::mt19937_64 rng(9);
  for (std::size_t n : {1u, 2u, 7u, 65u, 130u}) {
    const DenseMatrix a = ref::random_matrix(rng, n, n);
    const DenseMatrix b = ref::random_matrix(rng, n, 40);
    const auto fs = lu_factor(a, Backend::Serial);
    const auto fp = lu_factor(a, Backend::Parallel);
    CHECK(fs.perm == fp.perm);
    CHECK(fs.sign == fp.sign);
    const DenseMatrix xs = lu_solve(fs, b, Backend::Serial);
    const DenseMatrix xp = lu_solve(fp, b, Backend::Parallel);
    CHECK((xs - xp).max_abs() < 1e-10 * xs.max_abs());
  }
}

TEST_CASE("quadrature sums match bit for bit") {
  std::vector<double> nodes;
  std::vector<double> weights;
  axis_rule(QuadRule::Simpson, 101, nodes, weights);
  std::vector<cplx> inv(nodes.size() * nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = 0; b < nodes.size(); ++b) inv[a * nodes.size() + b] = 1.0 / sigma(nodes[a], nodes[b], {2.0, 0.1});
  }
  const kernels::QuadGrid grid{nodes.data(), weights.data(), nodes.size(), inv.data()};
  for (int x1 = -2; x1 <= 2; ++x1) {
    for (int x2 = -2; x2 <= 2; ++x2) {
      CHECK(kernels::serial::quad_sum(grid, x1, x2) == kernels::parallel::quad_sum(grid, x1, x2));
    }
  }
}

TEST_CASE("single-layer field kernels agree") {
  std::vector<std::int64_t> targets;
  for (int i = -5; i <= 5; ++i) {
    for (int j = -5; j <= 5; ++j) {
      targets.push_back(i);
      targets.push_back(j);
    }
  }
  const std::vector<std::int64_t> sources{0, 0, 2, -1, -3, 3};
  const std::vector<cplx> density{1.0, cplx(0.0, 2.0), -0.5};
  const kernels::FieldTask task{targets.data(), targets.size() / 2, sources.data(), density.data(), 3};
  const auto lookup = [](std::int64_t a, std::int64_t b) {
    return cplx(1.0 / (1.0 + static_cast<double>(a * a + b * b)), static_cast<double>(a - b));
  };
  std::vector<cplx> s(task.count);
  std::vector<cplx> p(task.count);
  kernels::serial::single_layer(task, lookup, s.data());
  kernels::parallel::single_layer(task, lookup, p.data());
  CHECK(s == p);
}
