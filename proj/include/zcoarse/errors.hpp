#pragma once

#include <stdexcept>
#include <string>

namespace zcoarse {

/// An operation was called outside its stated preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data (a digit vector, a table) violates a structural invariant.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A certificate check found a counterexample. Carries a human-readable description of it.
class CertificateViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zcoarse
