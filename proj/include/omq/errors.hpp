#pragma once

#include <stdexcept>
#include <string>

namespace omq {

/// A covariance matrix that is not a valid quantum state (fails V + iΩ/2 >= 0).
class NonPhysicalCovariance : public std::runtime_error {
 public:
  explicit NonPhysicalCovariance(const std::string& what) : std::runtime_error(what) {}
};

/// Drift matrix has an eigenvalue with real part above the stability margin.
class UnstableSystem : public std::runtime_error {
 public:
  explicit UnstableSystem(const std::string& what) : std::runtime_error(what) {}
};

/// Filter bank violates the orthonormality condition.
class NonOrthonormalFilters : public std::runtime_error {
 public:
  explicit NonOrthonormalFilters(const std::string& what) : std::runtime_error(what) {}
};

/// Operation restricted to resonant drive was called with nonzero detuning.
class InvalidDetuning : public std::runtime_error {
 public:
  explicit InvalidDetuning(const std::string& what) : std::runtime_error(what) {}
};

/// Squeezed-input parameters violate |M|^2 <= N(N+1).
class InvalidSqueezing : public std::runtime_error {
 public:
  explicit InvalidSqueezing(const std::string& what) : std::runtime_error(what) {}
};

/// Truncated-state population escaped the Fock cutoff.
class CutoffOverflow : public std::runtime_error {
 public:
  explicit CutoffOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed run configuration (unknown key, missing unit, bad value).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace omq
