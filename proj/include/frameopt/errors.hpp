#pragma once

#include <stdexcept>
#include <string>

namespace frameopt {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

// Synthesis operator does not have full row rank (the vectors do not span).
struct RankDeficientError : Error {
  using Error::Error;
};

struct NotUnitaryError : Error {
  using Error::Error;
};

struct NotTightError : Error {
  using Error::Error;
};

struct NotDualError : Error {
  using Error::Error;
};

// Some probability equals 1: the corresponding weight number diverges.
struct DegenerateProbabilityError : Error {
  using Error::Error;
};

struct NotNormalizedError : Error {
  using Error::Error;
};

// Erasure multiplicity m outside 1..N.
struct BadMultiplicityError : Error {
  using Error::Error;
};

struct NotSortedError : Error {
  using Error::Error;
};

// Requested norms are not majorized by the requested spectrum.
struct MajorizationFailedError : Error {
  using Error::Error;
};

// Malformed input file or JSON document (missing keys, wrong shapes).
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace frameopt
