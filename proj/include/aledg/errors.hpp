#pragma once

#include <stdexcept>
#include <string>

namespace aledg {

/// Base class for every failure the solver can raise.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A state with non-positive density or pressure reached a conversion or a
/// flux evaluation. Usually indicates a CFL violation or that the positivity
/// limiter is needed.
struct NonPhysicalState : Error {
  using Error::Error;
};

/// The Roe average state has non-positive squared sound speed.
struct RoeAverageFailure : Error {
  using Error::Error;
};

/// A cell ended the step with non-positive width; the time-step contract was
/// violated.
struct InvertedCell : Error {
  using Error::Error;
};

struct EmptyMesh : Error {
  using Error::Error;
};

/// A cell average is non-physical; the scaling limiter cannot recover from
/// this.
struct AverageNotPhysical : Error {
  using Error::Error;
};

/// The Riemann data generates vacuum; there is no solution with positive
/// pressure.
struct VacuumGenerated : Error {
  using Error::Error;
};

struct MaxStepsExceeded : Error {
  using Error::Error;
};

/// Invalid user-facing configuration (unknown problem, bad enum value, ...).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace aledg
