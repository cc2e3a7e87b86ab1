#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trigreen {

/// Precondition violated on a lattice or region argument.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// LU elimination met a pivot below the relative threshold.
class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix(std::size_t pivot_index, double pivot_modulus, double threshold);

  std::size_t pivot_index() const noexcept { return pivot_index_; }
  double pivot_modulus() const noexcept { return pivot_modulus_; }

 private:
  std::size_t pivot_index_;
  double pivot_modulus_;
};

/// The requested closing matrix for the backward chain cannot be built.
class GuessInadmissible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure inside the shell recursion, tagged with the shell index.
class EngineError : public std::runtime_error {
 public:
  EngineError(const std::string& what, long shell);

  /// Shell index n at which the chain failed, or -1 when not shell-specific.
  long shell() const noexcept { return shell_; }

 private:
  long shell_;
};

/// A Green's function lookup beyond the radius served by a table.
class RadiusExceeded : public std::out_of_range {
 public:
  RadiusExceeded(long required, long available);

  long required() const noexcept { return required_; }
  long available() const noexcept { return available_; }

 private:
  long required_;
  long available_;
};

/// The boundary system could not be factored; carries the diagnostics.
class NearSingularBoundary : public std::runtime_error {
 public:
  NearSingularBoundary(const std::string& what, double abs_det, double cond2);

  double abs_det() const noexcept { return abs_det_; }
  double cond2() const noexcept { return cond2_; }

 private:
  double abs_det_;
  double cond2_;
};

/// Invalid run configuration. The message always names the key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& key, const std::string& message);

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace trigreen
