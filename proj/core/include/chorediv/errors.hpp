#pragma once

#include <stdexcept>
#include <string>

namespace chorediv {

// Malformed input: bad JSON, out-of-range values, inconsistent allocations.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value or product escaped the representable range.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke an operation's precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A property the algorithms guarantee did not hold. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Brute-force enumeration would exceed the configured state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The EFX initial-allocation construction cannot produce a well-formed
// bundle for this instance.
class CannotConstruct : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chorediv
