#pragma once

#include <stdexcept>
#include <string>

namespace lsob {

/// Malformed or out-of-range argument (dimension mismatch, index out of range).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but violates a mathematical precondition,
/// e.g. a rank-deficient state where a full-rank one is required.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested problem exceeds a configured size cap.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lsob
