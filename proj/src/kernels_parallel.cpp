#include <omp.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "kernels_detail.hpp"

namespace trigreen::kernels::parallel {

namespace {

// y -= (ar + i ai) * x over len complex entries, on the interleaved doubles.
inline void sub_scaled(double* __restrict y, const double* __restrict x, double ar, double ai,
                       std::size_t len) {
#pragma omp simd
  for (std::size_t j = 0; j < len; ++j) {
    const double xr = x[2 * j];
    const double xi = x[2 * j + 1];
    y[2 * j] -= ar * xr - ai * xi;
    y[2 * j + 1] -= ar * xi + ai * xr;
  }
}

inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }
inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }

}  // namespace

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
      std::swap_ranges(a + k * n, a + (k + 1) * n, a + piv * n);
      std::swap(perm[k], perm[piv]);
      status.sign = -status.sign;
    }
    if (status.weak_pivot < 0 && !(best > col_threshold[k])) {
      status.weak_pivot = static_cast<long>(k);
      status.weak_modulus = best;
    }
    if (best == 0.0) continue;
    const cplx inv = 1.0 / a[k * n + k];
    const double* pivot_row = as_doubles(a + k * n + k + 1);
    const std::size_t len = n - k - 1;
    const auto last = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (len > 64)
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) + 1; i < last; ++i) {
      cplx* row = a + static_cast<std::size_t>(i) * n;
      const cplx l = row[k] * inv;
      row[k] = l;
      sub_scaled(as_doubles(row + k + 1), pivot_row, l.real(), l.imag(), len);
    }
  }
  return status;
}

void lu_solve(const cplx* lu, std::size_t n, const std::size_t* perm, cplx* b, std::size_t nrhs) {
  std::vector<cplx> y(n * nrhs);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(b + perm[i] * nrhs, nrhs, y.data() + i * nrhs);
  }
#pragma omp parallel if (nrhs >= 32)
  {
    const auto threads = static_cast<std::size_t>(omp_get_num_threads());
    const auto id = static_cast<std::size_t>(omp_get_thread_num());
    const std::size_t chunk = (nrhs + threads - 1) / threads;
    const std::size_t c0 = std::min(nrhs, id * chunk);
    const std::size_t c1 = std::min(nrhs, c0 + chunk);
    const std::size_t width = c1 - c0;
    if (width > 0) {
      for (std::size_t i = 1; i < n; ++i) {
        double* yi = as_doubles(y.data() + i * nrhs + c0);
        for (std::size_t k = 0; k < i; ++k) {
          const cplx l = lu[i * n + k];
          if (l == 0.0) continue;
          sub_scaled(yi, as_doubles(y.data() + k * nrhs + c0), l.real(), l.imag(), width);
        }
      }
      for (std::size_t ii = n; ii-- > 0;) {
        double* yi = as_doubles(y.data() + ii * nrhs + c0);
        for (std::size_t k = ii + 1; k < n; ++k) {
          const cplx u = lu[ii * n + k];
          if (u == 0.0) continue;
          sub_scaled(yi, as_doubles(y.data() + k * nrhs + c0), u.real(), u.imag(), width);
        }
        const cplx inv = 1.0 / lu[ii * n + ii];
        cplx* row = y.data() + ii * nrhs + c0;
        for (std::size_t c = 0; c < width; ++c) row[c] *= inv;
      }
    }
  }
  std::copy(y.begin(), y.end(), b);
}

cplx quad_sum(const QuadGrid& grid, std::int64_t x1, std::int64_t x2) {
  const auto phase = detail::phase_row(grid, x2);
  std::vector<cplx> partial(grid.mesh);
  const auto mesh = static_cast<std::ptrdiff_t>(grid.mesh);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t a = 0; a < mesh; ++a) {
    partial[static_cast<std::size_t>(a)] =
        detail::quad_row(grid, static_cast<std::size_t>(a), x1, phase);
  }
  cplx total = 0.0;
  for (const auto& v : partial) total += v;
  return total;
}

}  // namespace trigreen::kernels::parallel
