#include "trigreen/errors.hpp"

#include <sstream>

namespace trigreen {

namespace {

std::string singular_message(std::size_t pivot_index, double pivot_modulus, double threshold) {
  std::ostringstream os;
  os << "singular matrix: pivot " << pivot_index << " has modulus " << pivot_modulus
     << " (threshold " << threshold << ")";
  return os.str();
}

std::string radius_message(long required, long available) {
  std::ostringstream os;
  os << "Green table radius exceeded: lookup needs M >= " << required << ", table serves M = "
     << available;
  return os.str();
}

}  // namespace

SingularMatrix::SingularMatrix(std::size_t pivot_index, double pivot_modulus, double threshold)
    : std::runtime_error(singular_message(pivot_index, pivot_modulus, threshold)),
      pivot_index_(pivot_index),
      pivot_modulus_(pivot_modulus) {}

EngineError::EngineError(const std::string& what, long shell)
    : std::runtime_error(what), shell_(shell) {}

RadiusExceeded::RadiusExceeded(long required, long available)
    : std::out_of_range(radius_message(required, available)),
      required_(required),
      available_(available) {}

NearSingularBoundary::NearSingularBoundary(const std::string& what, double abs_det, double cond2)
    : std::runtime_error(what), abs_det_(abs_det), cond2_(cond2) {}

ConfigError::ConfigError(const std::string& key, const std::string& message)
    : std::invalid_argument("config key '" + key + "': " + message), key_(key) {}

}  // namespace trigreen
