#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct NonHermitianInput : Error {
  using Error::Error;
};
struct NotPositiveSemidefinite : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct NegativeInput : Error {
  using Error::Error;
};
struct NormalizationError : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct ClosureViolation : Error {
  using Error::Error;
};
struct HomomorphismViolation : Error {
  using Error::Error;
};
struct NonUnitaryElement : Error {
  using Error::Error;
};
struct NonUnitaryInput : Error {
  using Error::Error;
};
struct NotSymmetryPreserving : Error {
  using Error::Error;
};
struct DimensionCapExceeded : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace qsym
