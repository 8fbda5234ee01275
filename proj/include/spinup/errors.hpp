#pragma once

#include <stdexcept>
#include <string>

namespace spinup {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad diagram, domain violation, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An expression produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search hit its configured budget. Never silently truncated.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical consistency check failed (grading drop, d^2, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A pipeline certification stage failed; `stage()` names it.
class CertificationFailure : public Error {
 public:
  CertificationFailure(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace spinup
