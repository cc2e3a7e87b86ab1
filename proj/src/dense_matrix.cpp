#include "trigreen/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "trigreen/errors.hpp"
#include "trigreen/kernels.hpp"

namespace trigreen {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<cplx>& d) {
  DenseMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

double DenseMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& v : data_) best = std::max(best, std::abs(v));
  return best;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx* ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      const cplx* bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

DenseMatrix operator*(cplx s, const DenseMatrix& a) {
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.rows() * c.cols(); ++i) c.data()[i] *= s;
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix difference: shape mismatch");
  }
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.rows() * c.cols(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.rows() * c.cols(); ++i) c.data()[i] += b.data()[i];
  return c;
}

std::vector<cplx> operator*(const DenseMatrix& a, const std::vector<cplx>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<cplx> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    const cplx* ai = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) s += ai[j] * x[j];
    y[i] = s;
  }
  return y;
}

// ---------------------------------------------------------------------------

LUFactors lu_factor_nothrow(DenseMatrix a, Backend backend) {
  if (!a.square()) throw std::invalid_argument("LU factorisation needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<double> threshold(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) threshold[j] = std::max(threshold[j], std::abs(a(i, j)));
  }
  for (auto& t : threshold) t *= kPivotThreshold;

  LUFactors f;
  f.perm.resize(n);
  const auto status = backend == Backend::Serial
                          ? kernels::serial::lu_factor(a.data(), n, f.perm.data(), threshold.data())
                          : kernels::parallel::lu_factor(a.data(), n, f.perm.data(), threshold.data());
  f.lu = std::move(a);
  f.sign = status.sign;
  f.weak_pivot = status.weak_pivot;
  f.weak_modulus = status.weak_modulus;
  if (status.weak_pivot >= 0) {
    f.weak_threshold = threshold[static_cast<std::size_t>(status.weak_pivot)];
  }
  return f;
}

LUFactors lu_factor(DenseMatrix a, Backend backend) {
  LUFactors f = lu_factor_nothrow(std::move(a), backend);
  if (f.weak_pivot >= 0) {
    throw SingularMatrix(static_cast<std::size_t>(f.weak_pivot), f.weak_modulus, f.weak_threshold);
  }
  return f;
}

DenseMatrix lu_solve(const LUFactors& f, DenseMatrix b, Backend backend) {
  const std::size_t n = f.lu.rows();
  if (b.rows() != n) throw std::invalid_argument("lu_solve: right-hand side has wrong row count");
  if (f.weak_pivot >= 0) {
    throw SingularMatrix(static_cast<std::size_t>(f.weak_pivot), f.weak_modulus, f.weak_threshold);
  }
  if (backend == Backend::Serial) {
    kernels::serial::lu_solve(f.lu.data(), n, f.perm.data(), b.data(), b.cols());
  } else {
    kernels::parallel::lu_solve(f.lu.data(), n, f.perm.data(), b.data(), b.cols());
  }
  return b;
}

DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b, Backend backend) {
  if (!a.square()) throw std::invalid_argument("lu_solve: matrix is not square");
  if (b.rows() != a.rows()) throw std::invalid_argument("lu_solve: right-hand side has wrong row count");
  return lu_solve(lu_factor(a, backend), b, backend);
}

std::vector<cplx> lu_solve(const LUFactors& f, std::vector<cplx> b) {
  DenseMatrix rhs(b.size(), 1);
  std::copy(b.begin(), b.end(), rhs.data());
  rhs = lu_solve(f, std::move(rhs), Backend::Serial);
  return {rhs.data(), rhs.data() + rhs.rows()};
}

std::vector<cplx> lu_solve_adjoint(const LUFactors& f, std::vector<cplx> b) {
  // A = P^T L U, so A^H = U^H L^H P.
  const std::size_t n = f.lu.rows();
  if (b.size() != n) throw std::invalid_argument("lu_solve_adjoint: wrong vector length");
  if (f.weak_pivot >= 0) {
    throw SingularMatrix(static_cast<std::size_t>(f.weak_pivot), f.weak_modulus, f.weak_threshold);
  }
  const auto& lu = f.lu;
  for (std::size_t i = 0; i < n; ++i) {
    cplx s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= std::conj(lu(k, i)) * b[k];
    b[i] = s / std::conj(lu(i, i));
  }
  for (std::size_t ii = n; ii-- > 0;) {
    cplx s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(lu(k, ii)) * b[k];
    b[ii] = s;
  }
  std::vector<cplx> x(n);
  for (std::size_t i = 0; i < n; ++i) x[f.perm[i]] = b[i];
  return x;
}

cplx determinant(const LUFactors& f) {
  cplx det = static_cast<double>(f.sign);
  for (std::size_t i = 0; i < f.lu.rows(); ++i) det *= f.lu(i, i);
  return det;
}

cplx determinant(const DenseMatrix& a) { return determinant(lu_factor_nothrow(a)); }

namespace {

double norm2(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

void normalise(std::vector<cplx>& v) {
  const double n = norm2(v);
  for (auto& z : v) z /= n;
}

std::vector<cplx> adjoint_times(const DenseMatrix& a, const std::vector<cplx>& x) {
  std::vector<cplx> y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += std::conj(a(i, j)) * x[i];
  }
  return y;
}

constexpr double kPowerTolerance = 1e-6;
constexpr int kPowerMaxIterations = 500;

// Largest eigenvalue of a Hermitian positive operator by power iteration.
template <class Apply>
double dominant_eigenvalue(std::size_t n, Apply&& apply) {
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& z : v) z = {dist(rng), dist(rng)};
  normalise(v);
  double estimate = 0.0;
  for (int it = 0; it < kPowerMaxIterations; ++it) {
    std::vector<cplx> w = apply(v);
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < n; ++i) rayleigh += (std::conj(v[i]) * w[i]).real();
    const double next = rayleigh;
    const bool done = it > 0 && std::abs(next - estimate) <= kPowerTolerance * std::abs(next);
    estimate = next;
    if (norm2(w) == 0.0) break;
    v = std::move(w);
    normalise(v);
    if (done) break;
  }
  return estimate;
}

}  // namespace

double cond2_estimate(const DenseMatrix& a, const LUFactors& f) {
  if (!a.square()) throw std::invalid_argument("cond2_estimate needs a square matrix");
  const std::size_t n = a.rows();
  const double big = dominant_eigenvalue(n, [&](const std::vector<cplx>& v) {
    return adjoint_times(a, a * v);
  });
  const double small_inv = dominant_eigenvalue(n, [&](const std::vector<cplx>& v) {
    return lu_solve(f, lu_solve_adjoint(f, v));
  });
  return std::sqrt(big) * std::sqrt(small_inv);
}

double cond2_estimate(const DenseMatrix& a) { return cond2_estimate(a, lu_factor(a)); }

}  // namespace trigreen
