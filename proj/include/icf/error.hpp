#pragma once

#include <stdexcept>
#include <string>

namespace icf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Repeated vertices, zero-length edges or too few vertices.
class DegenerateCurveError : public Error {
 public:
  using Error::Error;
};

/// A vertex with non-positive discrete curvature was met during a flow step.
class ConvexityLossError : public Error {
 public:
  using Error::Error;
};

/// Requested time step exceeds the parabolic stability bound.
class StepRejectedError : public Error {
 public:
  StepRejectedError(const std::string& what, double dt, double bound)
      : Error(what), dt_(dt), bound_(bound) {}
  double dt() const noexcept { return dt_; }
  double bound() const noexcept { return bound_; }

 private:
  double dt_;
  double bound_;
};

/// Lf evaluated at its removable singularity x = 0.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The upper end of a t̄ search interval is not admissible.
class NoAdmissibleOffsetError : public Error {
 public:
  using Error::Error;
};

/// A ratio would be formed from quantities below their noise floor.
class NoiseFloorError : public Error {
 public:
  using Error::Error;
};

/// Wraps a step failure with the flow time at which it happened.
class FlowError : public Error {
 public:
  enum class Cause { convexity_loss, step_rejected, degenerate };

  FlowError(const std::string& what, double time, Cause cause)
      : Error(what), time_(time), cause_(cause) {}
  double time() const noexcept { return time_; }
  Cause cause() const noexcept { return cause_; }

 private:
  double time_;
  Cause cause_;
};

}  // namespace icf
