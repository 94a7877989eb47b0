#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace decostab {

/// Base class for all domain-level failures raised by the library.
///
/// Every error carries a short machine-readable `code` (stable across
/// releases, suitable for JSON reports) alongside the human-readable
/// message.  The command-line driver maps these to exit status 3;
/// malformed input that never reaches the library maps to status 2.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Vector/matrix length disagreements, rank mismatches, r < 2, and similar.
class DimensionError : public DomainError {
public:
  explicit DimensionError(const std::string& what)
      : DomainError("dimension-mismatch", what) {}
};

/// A tensor point that violates its representation invariants
/// (all coefficients zero, index out of range, ...).
class InvalidPointError : public DomainError {
public:
  explicit InvalidPointError(const std::string& what)
      : DomainError("invalid-point", what) {}
};

/// Asking for an instability certificate of a semistable point,
/// probing with an unstable second factor, and similar broken
/// preconditions.
class PreconditionError : public DomainError {
public:
  PreconditionError(std::string code, const std::string& what)
      : DomainError(std::move(code), what) {}
};

/// Out-of-range or missing caller parameters (non-positive stability
/// parameter, empty degree bounds, missing regularity surrogates, ...).
class ParameterError : public DomainError {
public:
  explicit ParameterError(const std::string& what)
      : DomainError("bad-parameter", what) {}
};

}  // namespace decostab
