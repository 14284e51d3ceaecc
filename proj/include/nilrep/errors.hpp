#pragma once

#include <stdexcept>
#include <string>

namespace nilrep {

// Base class for all library failures. Subclasses distinguish failure
// modes so tests can pin them and the CLI can report them.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed presentation file or polynomial/word text.
struct SyntaxError : Error {
  using Error::Error;
};

// Generator indices out of range or violating i < j < k.
struct IndexError : Error {
  using Error::Error;
};

// Missing, nonpositive, or inconsistent generator weights.
struct WeightError : Error {
  using Error::Error;
};

// Central-product operand whose identified generator is not central.
struct CentralityError : Error {
  using Error::Error;
};

// Rewrite/closure step budget exhausted; signals invalid input.
struct NonTerminatingError : Error {
  using Error::Error;
};

// Interpolation system could not be solved at full rank.
struct InterpolationRankError : Error {
  using Error::Error;
};

// A computed object failed its independent re-check.
struct VerificationError : Error {
  using Error::Error;
};

// Matrix extraction hit a non-unitriangular action.
struct NonTriangularError : Error {
  using Error::Error;
};

// Matrix extraction produced a non-integer entry.
struct NonIntegralEntryError : Error {
  using Error::Error;
};

// Dimension or sample budget exceeded.
struct BudgetExceededError : Error {
  using Error::Error;
};

}  // namespace nilrep
