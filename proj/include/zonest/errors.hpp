#ifndef ZONEST_ERRORS_HPP_
#define ZONEST_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zonest {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct EmptyIntervalError : Error {
  using Error::Error;
};

/// Division a/b where 0 is contained in b.
struct IntervalDivisionByZero : Error {
  using Error::Error;
};

/// Point evaluation hit a singularity (division by zero, sqrt of a
/// negative, 0 raised to a negative power).
struct DomainError : Error {
  using Error::Error;
};

/// Interval evaluation left the domain of an elementary function.
struct IntervalDomainError : Error {
  using Error::Error;
};

struct EmptySetError : Error {
  using Error::Error;
};

struct UnboundedPolytope : Error {
  using Error::Error;
};

struct InfeasibleProgram : Error {
  using Error::Error;
};

struct UnboundedProgram : Error {
  using Error::Error;
};

/// Simplex exceeded its pivot budget even after switching to Bland's rule.
struct NumericalFailure : Error {
  using Error::Error;
};

struct ExhaustiveTooLarge : Error {
  using Error::Error;
};

struct HNotInX : Error {
  using Error::Error;
};

struct X0NotInPrior : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct ModelNotFound : Error {
  using Error::Error;
};

struct RejectionBudgetExceeded : Error {
  using Error::Error;
};

}  // namespace zonest

#endif  // ZONEST_ERRORS_HPP_
