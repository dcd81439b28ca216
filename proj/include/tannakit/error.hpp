#pragma once

#include <stdexcept>
#include <string>

namespace tannakit {

/// Malformed or inconsistent input (bad JSON, shape mismatch, bad word).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// The input is well formed but the requested mathematical structure does
/// not exist or could not be certified (singular pairing, not AS-regular,
/// inconclusive antipode verification, ...).
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tannakit
