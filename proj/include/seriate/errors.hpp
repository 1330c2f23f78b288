#ifndef SERIATE_ERRORS_HPP
#define SERIATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seriate {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument to a library call (bad dimensions, out-of-range parameter).
struct BadParameter : Error {
  using Error::Error;
};

// Operand shapes do not agree.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Eigensolver failed to reach the requested tolerance within the sweep limit.
struct NonConvergence : Error {
  using Error::Error;
};

// Second-smallest Laplacian eigenvalue is numerically zero.
struct DisconnectedGraph : Error {
  using Error::Error;
};

// The requested Fiedler vector is not unique.
struct MultipleFiedler : Error {
  using Error::Error;
};

// The method only handles an eigenspace of dimension two.
struct UnsupportedMultiplicity : Error {
  using Error::Error;
};

// Basis vectors do not span a plane, or every line in the arrangement is parallel.
struct DegenerateBasis : Error {
  using Error::Error;
};

// The number of permutations about to be generated exceeds the configured cap.
struct ExplosionGuard : Error {
  using Error::Error;
};

// Instance is beyond the size limit of an exhaustive routine.
struct TooLarge : Error {
  using Error::Error;
};

// Malformed input file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace seriate

#endif
