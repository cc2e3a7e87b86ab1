#include <cmath>
#include <utility>
#include <vector>

#include "kernels_detail.hpp"

namespace trigreen::kernels {

namespace detail {

std::vector<cplx> phase_row(const QuadGrid& grid, std::int64_t x) {
  std::vector<cplx> phase(grid.mesh);
  const auto xd = static_cast<double>(x);
  for (std::size_t b = 0; b < grid.mesh; ++b) phase[b] = std::polar(1.0, xd * grid.nodes[b]);
  return phase;
}

cplx quad_row(const QuadGrid& grid, std::size_t a, std::int64_t x1, const std::vector<cplx>& phase) {
  const cplx* row = grid.inv_sigma + a * grid.mesh;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t b = 0; b < grid.mesh; ++b) {
    const cplx t = phase[b] * row[b];
    re += grid.weights[b] * t.real();
    im += grid.weights[b] * t.imag();
  }
  const cplx outer = grid.weights[a] * std::polar(1.0, static_cast<double>(x1) * grid.nodes[a]);
  return outer * cplx(re, im);
}

}  // namespace detail

namespace serial {

FactorStatus lu_factor(cplx* a, std::size_t n, std::size_t* perm, const double* col_threshold) {
  FactorStatus status;
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(a[i * n + k]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      std::swap(perm[k], perm[piv]);
      status.sign = -status.sign;
    }
    if (status.weak_pivot < 0 && !(best > col_threshold[k])) {
      status.weak_pivot = static_cast<long>(k);
      status.weak_modulus = best;
    }
    if (best == 0.0) continue;
    const cplx inv = 1.0 / a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx l = a[i * n + k] * inv;
      a[i * n + k] = l;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= l * a[k * n + j];
    }
  }
  return status;
}

void lu_solve(const cplx* lu, std::size_t n, const std::size_t* perm, cplx* b, std::size_t nrhs) {
  std::vector<cplx> y(n * nrhs);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < nrhs; ++c) y[i * nrhs + c] = b[perm[i] * nrhs + c];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const cplx l = lu[i * n + k];
      for (std::size_t c = 0; c < nrhs; ++c) y[i * nrhs + c] -= l * y[k * nrhs + c];
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) {
      const cplx u = lu[ii * n + k];
      for (std::size_t c = 0; c < nrhs; ++c) y[ii * nrhs + c] -= u * y[k * nrhs + c];
    }
    const cplx d = lu[ii * n + ii];
    for (std::size_t c = 0; c < nrhs; ++c) y[ii * nrhs + c] /= d;
  }
  std::copy(y.begin(), y.end(), b);
}

cplx quad_sum(const QuadGrid& grid, std::int64_t x1, std::int64_t x2) {
  const auto phase = detail::phase_row(grid, x2);
  cplx total = 0.0;
  for (std::size_t a = 0; a < grid.mesh; ++a) total += detail::quad_row(grid, a, x1, phase);
  return total;
}

}  // namespace serial

}  // namespace trigreen::kernels
