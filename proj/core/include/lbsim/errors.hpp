#pragma once

#include <stdexcept>
#include <string>

namespace lbsim {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed DIMACS input or other unparseable text.
struct ParseError : Error {
  using Error::Error;
};

/// Request exceeds a hard capacity limit (enumeration width, exponent range).
struct CapacityError : Error {
  using Error::Error;
};

/// Request exceeds the configured work budget and was refused up front.
struct BudgetError : Error {
  using Error::Error;
};

/// Parameters violate a documented hypothesis of the bound being evaluated.
struct HypothesisError : Error {
  using Error::Error;
};

}  // namespace lbsim
