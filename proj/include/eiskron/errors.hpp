#pragma once

#include <stdexcept>

namespace eiskron {

/// Violated precondition on a parameter (level, prime, precision, weight...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A rational with p in its denominator was pushed into Z[zeta_N]/p^M.
struct NotPIntegral : std::domain_error {
  using std::domain_error::domain_error;
};

/// Division by p^e requested on an element that is not divisible by p^e.
struct PrecisionError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace eiskron
