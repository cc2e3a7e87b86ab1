#pragma once

// Lattice Green's function by the Manhattan-shell transfer-matrix recursion.
//
// Shell n collects the distinct values on the wedge i >= j >= 0, i + j = n:
//   V_2p   = (G(2p,0), G(2p-1,1), ..., G(p,p))
//   V_2p+1 = (G(2p+1,0), ...,          G(p+1,p))
// and gamma_n V_n = alpha_n V_{n-1} + beta_n V_{n+1}. Closing the chain at
// shell N+1 with a guess for A_{N+1} gives A_n = (gamma_n - beta_n A_{n+1})^-1
// alpha_n, then G(0,0) from the equation at the origin and V_n = A_n V_{n-1}.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigreen/dense_matrix.hpp"
#include "trigreen/lattice.hpp"

namespace trigreen {

/// One stored entry of a sparse matrix, 1-based like the assembly rules.
struct Triplet {
  std::size_t row;
  std::size_t col;
  cplx value;
};

struct SparseTriplets {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Triplet> triplets;

  std::size_t nnz() const noexcept { return triplets.size(); }
  DenseMatrix dense() const;
};

struct ShellMatrices {
  SparseTriplets alpha;
  SparseTriplets beta;
  SparseTriplets gamma;
};

/// alpha_2p, beta_2p, gamma_2p for p >= 1.
ShellMatrices assemble_even(int p, cplx k2);
/// alpha_2p+1, beta_2p+1, gamma_2p+1 for p >= 0.
ShellMatrices assemble_odd(int p, cplx k2);
/// Dispatch on the parity of n >= 1.
ShellMatrices assemble_shell(int n, cplx k2);

enum class GuessKind { Zero, Shift, Heuristic };

std::string to_string(GuessKind kind);
/// "zero", "shift" or "heuristic".
GuessKind parse_guess_kind(const std::string& name);

/// The closing matrix A_{N+1} and the numbers that produced it.
struct InitialGuess {
  GuessKind kind = GuessKind::Zero;
  double epsilon = 0.0;  // shift applied to k^2 (Shift)
  cplx h = 0.0;          // Heuristic only
  cplx lambda = 0.0;     // selected root, Shift and Heuristic
  std::string note;      // how the root was picked

  std::string describe() const;
};

/// Default heuristic parameter sqrt((2p-1)/(2p+1)), real and positive.
cplx default_h(int p);

/// Builds A_{N+1}, of shape (p+1) x p with N+1 = 2p.
/// Shift: the root of 2 l^2 + (k~^2 - 4) l + 2 = 0 with |l| < 1.
/// Heuristic: a l^2 + b l + c = 0, a = 4p/(2p+1) h, b = k~^2 - 6 + 2h,
/// c = 4p/(2p-1) h; admissible roots satisfy |l| 2p/(2p+1) |h| < 1.
std::pair<InitialGuess, DenseMatrix> make_guess(GuessKind kind, const Wavenumber& k, int n_trunc,
                                                std::optional<cplx> h = std::nullopt);

/// A_1..A_keep (index 0 holds A_1) from the backward sweep n = N..1.
/// Only matrices with n <= keep are retained.
std::vector<DenseMatrix> backward_chain(const Wavenumber& k, int n_trunc, int keep,
                                        const DenseMatrix& closing, const InitialGuess& guess,
                                        Backend backend = Backend::Parallel);

/// Green's function values on the canonical wedge i >= j >= 0, i + j <= M.
class GreenTable {
 public:
  GreenTable(Wavenumber k, int n_trunc, int radius, InitialGuess guess, std::vector<cplx> values);

  const Wavenumber& wavenumber() const noexcept { return k_; }
  int truncation() const noexcept { return n_trunc_; }
  int radius() const noexcept { return radius_; }
  const InitialGuess& guess() const noexcept { return guess_; }

  /// Value at canonical (i, j); requires i >= j >= 0 and i + j <= M.
  cplx at(std::int64_t i, std::int64_t j) const;
  /// Values in storage order: by shell d = i + j, then j ascending.
  const std::vector<cplx>& values() const noexcept { return values_; }

  /// Number of canonical entries with i + j <= radius.
  static std::size_t entry_count(int radius);
  /// Position of canonical (i, j) in storage order.
  static std::size_t offset(std::int64_t i, std::int64_t j);

 private:
  Wavenumber k_;
  int n_trunc_;
  int radius_;
  InitialGuess guess_;
  std::vector<cplx> values_;
};

/// Builds the closing guess, runs the chain and unpacks V_0..V_M.
GreenTable build_table(const Wavenumber& k, int n_trunc, int radius, GuessKind kind,
                       std::optional<cplx> h = std::nullopt, Backend backend = Backend::Parallel);

/// Representative i >= j >= 0 of the orbit of x under swap, negation and
/// (x1, x2) -> (x1 + x2, -x2).
LatticeIndex canonicalize(LatticeIndex x);

/// G(x) by symmetry lookup. Throws RadiusExceeded beyond the table radius.
cplx green(const GreenTable& table, LatticeIndex x);

/// Hexagonal distance of x, i.e. i + j of its canonical form.
std::int64_t lattice_distance(LatticeIndex x);

/// max |(Delta_d + k~^2) G - delta| over canonical points whose stencil stays
/// inside the table radius.
double defining_residual(const GreenTable& table);

/// max |a(i,j) - b(i,j)| over canonical entries with i + j <= radius.
double max_table_difference(const GreenTable& a, const GreenTable& b, int radius);

}  // namespace trigreen
