#pragma once

#include <stdexcept>
#include <string>

namespace ilw {

/// Bad user input: grid sizes, config schema, mismatched operands.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// The L2 norm of a solve exceeded the configured growth factor. Signals
/// resolution failure, not dynamics; callers should abort loudly.
struct BlowupError : std::runtime_error {
  explicit BlowupError(const std::string& what) : std::runtime_error(what) {}
};

/// A pointwise-exponential evaluation was rejected because its spectral tail
/// carries too much mass for the working grid.
struct ResolutionError : std::runtime_error {
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ilw
