#pragma once

#include <stdexcept>
#include <string>

namespace addrep {

// Bad input, rejected up front (construction or argument checks).
// The CLI maps these to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotStrictlyIncreasing : InputError {
  explicit NotStrictlyIncreasing(const std::string& detail)
      : InputError("NotStrictlyIncreasing: " + detail) {}
};

struct NegativeWeight : InputError {
  explicit NegativeWeight(const std::string& detail)
      : InputError("NegativeWeight: " + detail) {}
};

struct EmptyCoefficients : InputError {
  explicit EmptyCoefficients(const std::string& detail)
      : InputError("EmptyCoefficients: " + detail) {}
};

struct DegenerateN : InputError {
  explicit DegenerateN(const std::string& detail)
      : InputError("DegenerateN: " + detail) {}
};

struct ZeroNodeNegativePower : InputError {
  explicit ZeroNodeNegativePower(const std::string& detail)
      : InputError("ZeroNodeNegativePower: " + detail) {}
};

// An oracle was asked to enumerate more states than its budget allows.
struct BudgetExceeded : InputError {
  explicit BudgetExceeded(const std::string& detail)
      : InputError("BudgetExceeded: " + detail) {}
};

// A mathematical identity that must hold did not. Any of these firing
// means a bug (or a deliberately injected fault in the test rig); the
// CLI maps them to exit code 3.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

struct NegativeResult : InvariantError {
  explicit NegativeResult(const std::string& detail)
      : InvariantError("NegativeResult: " + detail) {}
};

struct TheoremViolation : InvariantError {
  explicit TheoremViolation(const std::string& detail)
      : InvariantError("TheoremViolation: " + detail) {}
};

struct IdentityMismatch : InvariantError {
  explicit IdentityMismatch(const std::string& detail)
      : InvariantError("IdentityMismatch: " + detail) {}
};

}  // namespace addrep
