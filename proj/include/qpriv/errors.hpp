// Exception types used across the toolkit.
//
// The CLI maps these onto exit codes: validation/dimension/domain failures
// exit with 2, numeric failures with 3.

#ifndef QPRIV_ERRORS_HPP
#define QPRIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpriv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched or oversized matrix/subsystem dimensions.
struct DimensionError : Error {
  using Error::Error;
};

// Scalar argument outside its admissible range (probabilities, ranks, ...).
struct DomainError : Error {
  using Error::Error;
};

// A value failed its construction-time invariant (not a density operator,
// not a channel, not a POVM, ensemble member not pure, ...).
struct ValidationError : Error {
  using Error::Error;
};

// The computation itself broke down (eigensolver did not converge, a
// self-check residual blew up).
struct NumericError : Error {
  using Error::Error;
};

}  // namespace qpriv

#endif  // QPRIV_ERRORS_HPP
