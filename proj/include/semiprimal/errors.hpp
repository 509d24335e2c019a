#pragma once

#include <stdexcept>
#include <string>

namespace semiprimal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when two algebras that must share a signature do not.
struct SignatureMismatch : Error {
  using Error::Error;
};

// Products, closures and Boolean powers refuse to grow past the configured cap.
struct SizeCapExceeded : Error {
  using Error::Error;
};

struct NoLatticeReduct : Error {
  using Error::Error;
};

struct NotResiduated : Error {
  using Error::Error;
};

struct NotFLew : Error {
  using Error::Error;
};

struct NotInVariety : Error {
  using Error::Error;
};

struct NotSemiPrimalBase : Error {
  using Error::Error;
};

// The three semi-primality tests returned different verdicts.  This would
// falsify a theorem, so it is treated as an implementation bug.
struct RouteDisagreement : Error {
  using Error::Error;
};

struct BijectionFailure : Error {
  using Error::Error;
};

struct RoundTripFailure : Error {
  using Error::Error;
};

// A table completion search admitted zero or several solutions.
struct ConstructionAmbiguous : Error {
  using Error::Error;
};

struct EmptySample : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

// Malformed JSON documents or command-line parameters.
struct InvalidInput : Error {
  using Error::Error;
};

}  // namespace semiprimal
