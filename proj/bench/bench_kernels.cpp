// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "trigreen/kernels.hpp"
#include "trigreen/quadrature.hpp"

namespace {

using trigreen::kernels::cplx;

std::vector<cplx> random_block(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<cplx> a(n * n);
  for (auto& v : a) v = {d(rng), d(rng)};
  return a;
}

template <auto Factor>
void lu_factor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto source = random_block(n, 1);
  const std::vector<double> threshold(n, 0.0);
  std::vector<std::size_t> perm(n);
  for (auto _ : state) {
    auto a = source;
    benchmark::DoNotOptimize(Factor(a.data(), n, perm.data(), threshold.data()));
  }
  state.SetComplexityN(state.range(0));
}

template <auto Factor, auto Solve>
void lu_solve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto lu = random_block(n, 2);
  const std::vector<double> threshold(n, 0.0);
  std::vector<std::size_t> perm(n);
  Factor(lu.data(), n, perm.data(), threshold.data());
  const auto rhs = random_block(n, 3);
  for (auto _ : state) {
    auto b = rhs;
    Solve(lu.data(), n, perm.data(), b.data(), n);
    benchmark::DoNotOptimize(b.data());
  }
}

template <auto Sum>
void quad_sum(benchmark::State& state) {
  const int mesh = static_cast<int>(state.range(0));
  std::vector<double> nodes;
  std::vector<double> weights;
  trigreen::axis_rule(trigreen::QuadRule::Simpson, mesh, nodes, weights);
  std::vector<cplx> inv(nodes.size() * nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      inv[a * nodes.size() + b] = 1.0 / trigreen::sigma(nodes[a], nodes[b], cplx(2.25, 1e-2));
    }
  }
  const trigreen::kernels::QuadGrid grid{nodes.data(), weights.data(), nodes.size(), inv.data()};
  for (auto _ : state) benchmark::DoNotOptimize(Sum(grid, 2, 1));
}

namespace serial = trigreen::kernels::serial;
namespace parallel = trigreen::kernels::parallel;

BENCHMARK(lu_factor<serial::lu_factor>)->Name("lu_factor/serial")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(lu_factor<parallel::lu_factor>)->Name("lu_factor/parallel")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(lu_solve<serial::lu_factor, serial::lu_solve>)->Name("lu_solve/serial")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(lu_solve<parallel::lu_factor, parallel::lu_solve>)->Name("lu_solve/parallel")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(quad_sum<serial::quad_sum>)->Name("quad_sum/serial")->Arg(501)->Arg(2001);
BENCHMARK(quad_sum<parallel::quad_sum>)->Name("quad_sum/parallel")->Arg(501)->Arg(2001);

}  // namespace

BENCHMARK_MAIN();
