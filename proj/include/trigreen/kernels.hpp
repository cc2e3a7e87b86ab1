#pragma once

// Hot loops in two flavours. `serial` is the plain reference; `parallel`
// uses OpenMP and hand-split complex arithmetic. Both take the same raw
// row-major buffers so tests and the benchmark can swap them freely.

#include <complex>
#include <cstddef>
#include <cstdint>

namespace trigreen::kernels {

using cplx = std::complex<double>;

/// Outcome of an in-place LU factorisation.
struct FactorStatus {
  long weak_pivot = -1;  // first pivot below its threshold, -1 if none
  double weak_modulus = 0.0;
  int sign = 1;
};

/// Integrand table for a tensor quadrature: nodes and weights per axis plus
/// 1/sigma precomputed on the grid (row = first axis).
struct QuadGrid {
  const double* nodes;
  const double* weights;
  std::size_t mesh;
  const cplx* inv_sigma;  // mesh*mesh entries
};

/// Point cloud for a single-layer sum u(x) = sum_j G(x - y_j) phi_j.
/// `lookup(dx1, dx2)` returns G at the offset.
struct FieldTask {
  const std::int64_t* targets;  // 2*count interleaved (x1, x2)
  std::size_t count;
  const std::int64_t* sources;  // 2*m interleaved
  const cplx* density;
  std::size_t m;
};

namespace serial {

/// PA = LU in place on an n x n row-major block. `col_threshold[j]` is the
/// singular cutoff for pivot j. Elimination continues past weak pivots and
/// skips exactly zero ones.
FactorStatus lu_factor(cplx* a, std::size_t n, std::size_t* perm, const double* col_threshold);

/// Overwrites the n x nrhs row-major block b with the solution.
void lu_solve(const cplx* lu, std::size_t n, const std::size_t* perm, cplx* b, std::size_t nrhs);

/// sum_{a,b} w_a w_b e^{i(x1 xi_a + x2 xi_b)} * inv_sigma[a,b], unscaled.
cplx quad_sum(const QuadGrid& grid, std::int64_t x1, std::int64_t x2);

template <class Lookup>
void single_layer(const FieldTask& task, Lookup&& lookup, cplx* out) {
  for (std::size_t t = 0; t < task.count; ++t) {
    cplx sum = 0.0;
    for (std::size_t j = 0; j < task.m; ++j) {
      sum += lookup(task.targets[2 * t] - task.sources[2 * j],
                    task.targets[2 * t + 1] - task.sources[2 * j + 1]) *
             task.density[j];
    }
    out[t] = sum;
  }
}

}  // namespace serial

namespace parallel {

FactorStatus lu_factor(cplx* a, std::size_t n, std::size_t* perm, const double* col_threshold);

void lu_solve(const cplx* lu, std::size_t n, const std::size_t* perm, cplx* b, std::size_t nrhs);

/// Same sum as serial::quad_sum, rows distributed over threads. Per-row
/// partials are reduced in row order, so the result equals the serial one.
cplx quad_sum(const QuadGrid& grid, std::int64_t x1, std::int64_t x2);

template <class Lookup>
void single_layer(const FieldTask& task, Lookup&& lookup, cplx* out) {
  const auto count = static_cast<std::ptrdiff_t>(task.count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    cplx sum = 0.0;
    for (std::size_t j = 0; j < task.m; ++j) {
      sum += lookup(task.targets[2 * t] - task.sources[2 * j],
                    task.targets[2 * t + 1] - task.sources[2 * j + 1]) *
             task.density[j];
    }
    out[t] = sum;
  }
}

}  // namespace parallel

}  // namespace trigreen::kernels
