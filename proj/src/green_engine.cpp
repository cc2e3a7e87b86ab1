#include "trigreen/green_engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "trigreen/errors.hpp"

namespace trigreen {

DenseMatrix SparseTriplets::dense() const {
  DenseMatrix m(rows, cols);
  for (const auto& t : triplets) m(t.row - 1, t.col - 1) = t.value;
  return m;
}

// ---------------------------------------------------------------------------
// Assembly

ShellMatrices assemble_even(int p, cplx k2) {
  if (p < 1) throw DomainError("even shell assembly needs p >= 1");
  const auto q = static_cast<std::size_t>(p);
  ShellMatrices s;
  s.alpha = {q + 1, q, {}};
  s.beta = {q + 1, q + 1, {}};
  s.gamma = {q + 1, q + 1, {}};
  auto& a = s.alpha.triplets;
  auto& b = s.beta.triplets;
  auto& g = s.gamma.triplets;
  a.reserve(2 * q);
  b.reserve(2 * q + 1);
  g.reserve(3 * q + 1);

  for (std::size_t i = 1; i <= q; ++i) {
    a.push_back({i, i, 1.0});
    if (i >= 2) a.push_back({i, i - 1, 1.0});
  }
  a.push_back({q + 1, q, 2.0});

  b.push_back({1, 2, 2.0});
  b.push_back({1, 1, 1.0});
  for (std::size_t i = 2; i <= q; ++i) {
    b.push_back({i, i, 1.0});
    b.push_back({i, i + 1, 1.0});
  }
  b.push_back({q + 1, q + 1, 2.0});

  const cplx diag = 6.0 - k2;
  g.push_back({1, 1, diag});
  g.push_back({1, 2, -2.0});
  for (std::size_t i = 2; i <= q; ++i) {
    g.push_back({i, i - 1, -1.0});
    g.push_back({i, i, diag});
    g.push_back({i, i + 1, -1.0});
  }
  g.push_back({q + 1, q, -2.0});
  g.push_back({q + 1, q + 1, diag});
  return s;
}

ShellMatrices assemble_odd(int p, cplx k2) {
  if (p < 0) throw DomainError("odd shell assembly needs p >= 0");
  const auto q = static_cast<std::size_t>(p);
  ShellMatrices s;
  s.alpha = {q + 1, q + 1, {}};
  s.beta = {q + 1, q + 2, {}};
  s.gamma = {q + 1, q + 1, {}};
  auto& a = s.alpha.triplets;
  auto& b = s.beta.triplets;
  auto& g = s.gamma.triplets;

  for (std::size_t i = 1; i <= q + 1; ++i) {
    a.push_back({i, i, 1.0});
    if (i >= 2) a.push_back({i, i - 1, 1.0});
  }

  b.push_back({1, 1, 1.0});
  b.push_back({1, 2, 2.0});
  for (std::size_t i = 2; i <= q + 1; ++i) {
    b.push_back({i, i, 1.0});
    b.push_back({i, i + 1, 1.0});
  }

  if (q == 0) {
    g.push_back({1, 1, 4.0 - k2});
    return s;
  }
  const cplx diag = 6.0 - k2;
  g.push_back({1, 1, diag});
  g.push_back({1, 2, -2.0});
  for (std::size_t i = 2; i <= q; ++i) {
    g.push_back({i, i - 1, -1.0});
    g.push_back({i, i, diag});
    g.push_back({i, i + 1, -1.0});
  }
  g.push_back({q + 1, q, -1.0});
  g.push_back({q + 1, q + 1, 5.0 - k2});
  return s;
}

ShellMatrices assemble_shell(int n, cplx k2) {
  if (n < 1) throw DomainError("shell index must be >= 1");
  return n % 2 == 0 ? assemble_even(n / 2, k2) : assemble_odd((n - 1) / 2, k2);
}

// ---------------------------------------------------------------------------
// Closing guesses

std::string to_string(GuessKind kind) {
  switch (kind) {
    case GuessKind::Zero: return "zero";
    case GuessKind::Shift: return "shift";
    case GuessKind::Heuristic: return "heuristic";
  }
  return "unknown";
}

GuessKind parse_guess_kind(const std::string& name) {
  if (name == "zero") return GuessKind::Zero;
  if (name == "shift") return GuessKind::Shift;
  if (name == "heuristic") return GuessKind::Heuristic;
  throw std::invalid_argument("unknown guess kind '" + name + "' (expected zero, shift or heuristic)");
}

std::string InitialGuess::describe() const {
  std::ostringstream os;
  os.precision(6);
  // + 0.0 folds a signed zero so -0 is not printed
  const cplx l = lambda + cplx(0.0, 0.0);
  os << to_string(kind);
  if (kind == GuessKind::Shift) os << " (epsilon " << epsilon << ", lambda " << l << ")";
  if (kind == GuessKind::Heuristic) os << " (h " << h << ", lambda " << l << ")";
  return os.str();
}

cplx default_h(int p) {
  const double pp = p;
  return std::sqrt((2.0 * pp - 1.0) / (2.0 * pp + 1.0));
}

namespace {

std::array<cplx, 2> quadratic_roots(cplx a, cplx b, cplx c) {
  const cplx disc = std::sqrt(b * b - 4.0 * a * c);
  // Pick the sign that avoids cancellation, then use Vieta for the other root.
  const cplx q = -0.5 * (std::real(std::conj(b) * disc) >= 0.0 ? b + disc : b - disc);
  if (q == 0.0) return {0.0, 0.0};
  return {q / a, c / q};
}

}  // namespace

std::pair<InitialGuess, DenseMatrix> make_guess(GuessKind kind, const Wavenumber& k, int n_trunc,
                                                std::optional<cplx> h) {
  if (n_trunc < 1 || n_trunc % 2 == 0) {
    throw GuessInadmissible("truncation N must be odd and positive so that N+1 = 2p");
  }
  const int p = (n_trunc + 1) / 2;
  const auto q = static_cast<std::size_t>(p);
  const cplx k2 = k.k2();
  InitialGuess guess;
  guess.kind = kind;
  guess.epsilon = k.epsilon();
  DenseMatrix closing(q + 1, q);

  if (kind == GuessKind::Zero) return {guess, closing};

  if (kind == GuessKind::Shift) {
    if (!(k.epsilon() > 0.0)) {
      throw GuessInadmissible("shift guess needs epsilon > 0: with epsilon = 0 both roots have modulus 1");
    }
    const auto roots = quadratic_roots(2.0, k2 - 4.0, 2.0);
    const cplx lambda = std::abs(roots[0]) < std::abs(roots[1]) ? roots[0] : roots[1];
    if (!(std::abs(lambda) < 1.0)) {
      throw GuessInadmissible("shift guess: no root with |lambda| < 1");
    }
    guess.lambda = lambda;
    guess.note = "root with |lambda| < 1";
    closing(0, 0) = lambda;
    closing(q, q - 1) = lambda;
    for (std::size_t i = 2; i <= q; ++i) {
      closing(i - 1, i - 1) = 0.5 * lambda;
      closing(i - 1, i - 2) = 0.5 * lambda;
    }
    return {guess, closing};
  }

  const cplx hv = h.value_or(default_h(p));
  if (hv == 0.0) throw GuessInadmissible("heuristic guess needs h != 0");
  if (std::abs(k2 - 6.0) > 1e-14 && std::abs(hv) < std::abs(k2 - 6.0) / 6.0) {
    std::ostringstream os;
    os << "heuristic guess: |h| = " << std::abs(hv) << " is below |k^2 - 6|/6 = "
       << std::abs(k2 - 6.0) / 6.0;
    throw GuessInadmissible(os.str());
  }
  const double pp = p;
  const cplx a = 4.0 * pp / (2.0 * pp + 1.0) * hv;
  const cplx b = k2 - 6.0 + 2.0 * hv;
  const cplx c = 4.0 * pp / (2.0 * pp - 1.0) * hv;
  const auto roots = quadratic_roots(a, b, c);
  const double bound_factor = 2.0 * pp / (2.0 * pp + 1.0) * std::abs(hv);
  std::vector<cplx> admissible;
  for (const auto& r : roots) {
    if (std::abs(r) * bound_factor < 1.0) admissible.push_back(r);
  }
  if (admissible.empty()) {
    std::ostringstream os;
    os << "heuristic guess: neither root " << roots[0] << ", " << roots[1]
       << " satisfies |lambda| 2p/(2p+1) |h| < 1";
    throw GuessInadmissible(os.str());
  }
  cplx lambda = admissible.front();
  guess.note = "single admissible root";
  if (admissible.size() == 2) {
    const double m0 = std::abs(admissible[0]);
    const double m1 = std::abs(admissible[1]);
    if (std::abs(m0 - m1) > 1e-12 * std::max(m0, m1)) {
      lambda = m0 < m1 ? admissible[0] : admissible[1];
      guess.note = "both roots admissible, smaller |lambda|";
    } else {
      lambda = admissible[0].imag() >= admissible[1].imag() ? admissible[0] : admissible[1];
      guess.note = "both roots admissible with equal modulus, Im lambda > 0";
    }
  }
  guess.h = hv;
  guess.lambda = lambda;
  const cplx rho = lambda / hv;
  const cplx end = (2.0 * pp - 1.0) / (2.0 * pp) * rho;
  const cplx mid = (2.0 * pp - 1.0) / (4.0 * pp) * rho;
  closing(0, 0) = end;
  closing(q, q - 1) = end;
  for (std::size_t i = 2; i <= q; ++i) {
    closing(i - 1, i - 1) = mid;
    closing(i - 1, i - 2) = mid;
  }
  return {guess, closing};
}

// ---------------------------------------------------------------------------
// Backward chain

std::vector<DenseMatrix> backward_chain(const Wavenumber& k, int n_trunc, int keep,
                                        const DenseMatrix& closing, const InitialGuess& guess,
                                        Backend backend) {
  if (n_trunc < 1 || n_trunc % 2 == 0) throw EngineError("truncation N must be odd", -1);
  if (keep < 1 || keep > n_trunc) throw EngineError("retained radius M must satisfy 1 <= M <= N", -1);
  const auto p = static_cast<std::size_t>((n_trunc + 1) / 2);
  if (closing.rows() != p + 1 || closing.cols() != p) {
    throw EngineError("closing matrix has the wrong shape for shell N+1", n_trunc + 1);
  }

  const cplx k2 = k.k2();
  std::vector<DenseMatrix> kept(static_cast<std::size_t>(keep));
  DenseMatrix next = closing;
  for (int n = n_trunc; n >= 1; --n) {
    const ShellMatrices shell = assemble_shell(n, k2);
    DenseMatrix system = shell.gamma.dense();
    for (const auto& t : shell.beta.triplets) {
      cplx* dst = system.row(t.row - 1);
      const cplx* src = next.row(t.col - 1);
      for (std::size_t j = 0; j < system.cols(); ++j) dst[j] -= t.value * src[j];
    }
    LUFactors f = lu_factor_nothrow(std::move(system), backend);
    if (f.weak_pivot >= 0) {
      std::ostringstream os;
      os << "singular shell system at n = " << n << " (pivot " << f.weak_pivot << ", modulus "
         << f.weak_modulus << ") with guess " << guess.describe();
      if (k.degenerate() && k.epsilon() == 0.0) {
        os << "; k = 2 is degenerate for this closing guess, use the shift guess with epsilon > 0";
      }
      throw EngineError(os.str(), n);
    }
    next = lu_solve(f, shell.alpha.dense(), backend);
    if (n <= keep) kept[static_cast<std::size_t>(n - 1)] = next;
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Table

GreenTable::GreenTable(Wavenumber k, int n_trunc, int radius, InitialGuess guess,
                       std::vector<cplx> values)
    : k_(k), n_trunc_(n_trunc), radius_(radius), guess_(std::move(guess)), values_(std::move(values)) {
  if (radius_ < 0) throw std::invalid_argument("table radius must be nonnegative");
  if (values_.size() != entry_count(radius_)) {
    throw std::invalid_argument("table value count does not match its radius");
  }
}

std::size_t GreenTable::entry_count(int radius) {
  if (radius < 0) return 0;
  return offset(radius + 1, 0);
}

std::size_t GreenTable::offset(std::int64_t i, std::int64_t j) {
  // Shells e < d hold floor(e/2) + 1 entries each.
  const auto d = static_cast<std::size_t>(i + j);
  const std::size_t half = d / 2;
  std::size_t before = half * (half + 1);  // pairs of shells (2t, 2t+1) hold 2t + 2 entries
  if (d % 2 == 1) before += half + 1;
  return before + static_cast<std::size_t>(j);
}

cplx GreenTable::at(std::int64_t i, std::int64_t j) const {
  if (j < 0 || i < j) throw std::invalid_argument("GreenTable::at needs i >= j >= 0");
  if (i + j > radius_) throw RadiusExceeded(static_cast<long>(i + j), radius_);
  return values_[offset(i, j)];
}

GreenTable build_table(const Wavenumber& k, int n_trunc, int radius, GuessKind kind,
                       std::optional<cplx> h, Backend backend) {
  if (radius > n_trunc) throw EngineError("table radius M exceeds truncation N", -1);
  auto [guess, closing] = make_guess(kind, k, n_trunc, h);
  const int keep = std::max(radius, 1);
  const auto chain = backward_chain(k, n_trunc, keep, closing, guess, backend);

  const cplx a1 = chain[0](0, 0);
  const cplx denom = 6.0 * a1 - 6.0 + k.k2();
  if (std::abs(denom) < 1e-12) {
    throw EngineError("normalisation 6 A_1 - 6 + k^2 vanishes; G(0,0) is undefined", 1);
  }
  std::vector<cplx> values(GreenTable::entry_count(radius));
  std::vector<cplx> shell{1.0 / denom};
  values[0] = shell[0];
  for (int n = 1; n <= radius; ++n) {
    shell = chain[static_cast<std::size_t>(n - 1)] * shell;
    for (std::size_t l = 0; l < shell.size(); ++l) {
      const auto j = static_cast<std::int64_t>(l);
      values[GreenTable::offset(n - j, j)] = shell[l];
    }
  }
  return GreenTable(k, n_trunc, radius, std::move(guess), std::move(values));
}

// ---------------------------------------------------------------------------
// Symmetry

LatticeIndex canonicalize(LatticeIndex x) {
  std::array<LatticeIndex, 12> orbit;
  std::size_t size = 0;
  orbit[size++] = x;
  for (std::size_t head = 0; head < size; ++head) {
    const LatticeIndex y = orbit[head];
    const LatticeIndex neg = -y;
    const LatticeIndex shear = LatticeIndex{y.x1, 0} + LatticeIndex{y.x2, neg.x2};
    const std::array<LatticeIndex, 3> images{LatticeIndex{y.x2, y.x1}, neg, shear};
    for (const auto& z : images) {
      if (std::find(orbit.begin(), orbit.begin() + static_cast<std::ptrdiff_t>(size), z) ==
          orbit.begin() + static_cast<std::ptrdiff_t>(size)) {
        orbit[size++] = z;
      }
    }
  }
  bool found = false;
  LatticeIndex best{};
  for (std::size_t i = 0; i < size; ++i) {
    const auto& z = orbit[i];
    if (z.x1 >= z.x2 && z.x2 >= 0 && (!found || best < z)) {
      best = z;
      found = true;
    }
  }
  if (!found) throw std::logic_error("symmetry orbit misses the canonical wedge");
  return best;
}

std::int64_t lattice_distance(LatticeIndex x) {
  const LatticeIndex c = canonicalize(x);
  return c.x1 + c.x2;
}

cplx green(const GreenTable& table, LatticeIndex x) {
  const LatticeIndex c = canonicalize(x);
  return table.at(c.x1, c.x2);
}

double defining_residual(const GreenTable& table) {
  const cplx k2 = table.wavenumber().k2();
  double worst = 0.0;
  for (std::int64_t d = 0; d + 1 <= table.radius(); ++d) {
    for (std::int64_t j = 0; 2 * j <= d; ++j) {
      const LatticeIndex x{d - j, j};
      cplx sum = 0.0;
      for (const auto& v : neighbors(x)) sum += green(table, v);
      const cplx centre = table.at(x.x1, x.x2);
      cplx r = sum - 6.0 * centre + k2 * centre;
      if (d == 0) r -= 1.0;
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

double max_table_difference(const GreenTable& a, const GreenTable& b, int radius) {
  if (radius > a.radius() || radius > b.radius()) {
    throw RadiusExceeded(radius, std::min(a.radius(), b.radius()));
  }
  double worst = 0.0;
  for (std::size_t e = 0; e < GreenTable::entry_count(radius); ++e) {
    worst = std::max(worst, std::abs(a.values()[e] - b.values()[e]));
  }
  return worst;
}

}  // namespace trigreen
