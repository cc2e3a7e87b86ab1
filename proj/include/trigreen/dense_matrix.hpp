#pragma once

// Dense complex matrices and the LU-based solves used by the shell recursion
// and the boundary system.

#include <complex>
#include <cstddef>
#include <vector>

namespace trigreen {

using cplx = std::complex<double>;

/// Row-major dense complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(const std::vector<cplx>& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  cplx* data() noexcept { return data_.data(); }
  const cplx* data() const noexcept { return data_.data(); }
  const std::vector<cplx>& entries() const noexcept { return data_; }

  cplx* row(std::size_t i) { return data_.data() + i * cols_; }
  const cplx* row(std::size_t i) const { return data_.data() + i * cols_; }

  /// Largest entry modulus.
  double max_abs() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(cplx s, const DenseMatrix& a);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
std::vector<cplx> operator*(const DenseMatrix& a, const std::vector<cplx>& x);

/// Which kernel family the factorisation and solves run on.
enum class Backend { Serial, Parallel };

/// PA = LU with unit-lower L stored below the diagonal.
struct LUFactors {
  DenseMatrix lu;
  std::vector<std::size_t> perm;  // row i of LU came from row perm[i] of A
  int sign = 1;
  /// First pivot that fell below threshold, or -1.
  long weak_pivot = -1;
  double weak_modulus = 0.0;
  double weak_threshold = 0.0;
};

/// Relative pivot threshold: a pivot is singular when its modulus is below
/// this factor times the largest modulus in the same column of the input.
inline constexpr double kPivotThreshold = 1e-13;

/// Factor A with partial pivoting. Throws SingularMatrix on a weak pivot.
LUFactors lu_factor(DenseMatrix a, Backend backend = Backend::Parallel);
/// As lu_factor but records a weak pivot instead of throwing.
LUFactors lu_factor_nothrow(DenseMatrix a, Backend backend = Backend::Parallel);

DenseMatrix lu_solve(const LUFactors& f, DenseMatrix b, Backend backend = Backend::Parallel);
DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b,
                     Backend backend = Backend::Parallel);
std::vector<cplx> lu_solve(const LUFactors& f, std::vector<cplx> b);
/// Solves A^H x = b.
std::vector<cplx> lu_solve_adjoint(const LUFactors& f, std::vector<cplx> b);

/// Product of the pivots times the permutation sign; 0 for exactly singular A.
cplx determinant(const DenseMatrix& a);
cplx determinant(const LUFactors& f);

/// ||A||_2 ||A^-1||_2 from power iterations on A^H A and (A A^H)^-1.
double cond2_estimate(const DenseMatrix& a);
double cond2_estimate(const DenseMatrix& a, const LUFactors& f);

}  // namespace trigreen
