#pragma once

#include <stdexcept>

namespace sangaku {

// Malformed input to an exact algebraic routine (zero polynomial, too many
// variables, non-exact division, ...).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Numeric argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A precondition on the *state* of a computation does not hold (for example
// the Hensel condition at a lifting seed).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A budgeted resource (primes, evaluation points) ran out. Retriable with a
// larger budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A wall-clock budget expired before the computation finished.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sangaku
