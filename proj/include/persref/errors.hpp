#pragma once

#include <stdexcept>
#include <string>

namespace persref {

// Error taxonomy. The CLI maps categories to exit codes:
// ConfigError -> 2, DataError -> 3, ComputeError -> 4.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- data errors ---

struct IoError : DataError {
  using DataError::DataError;
};

struct SchemaError : DataError {
  long line;
  std::string field;
  SchemaError(long line_, std::string field_, const std::string& what_)
      : DataError("schema error at line " + std::to_string(line_) + ", field '" + field_ +
                  "': " + what_),
        line(line_),
        field(std::move(field_)) {}
};

struct InvariantViolation : DataError {
  std::string episode_id;
  std::string rule;
  InvariantViolation(std::string episode_id_, std::string rule_)
      : DataError("invariant violation [" + episode_id_ + "]: " + rule_),
        episode_id(std::move(episode_id_)),
        rule(std::move(rule_)) {}
};

struct NotSynthetic : DataError {
  using DataError::DataError;
};

struct UnknownParticipant : DataError {
  using DataError::DataError;
};

struct DegenerateRay : DataError {
  using DataError::DataError;
};

struct OutOfBounds : DataError {
  using DataError::DataError;
};

struct OutOfDomain : DataError {
  using DataError::DataError;
};

struct NonPositiveDistance : DataError {
  using DataError::DataError;
};

struct NonPositiveWidth : DataError {
  using DataError::DataError;
};

struct MissingModality : DataError {
  using DataError::DataError;
};

struct NoPointingFrames : DataError {
  using DataError::DataError;
};

struct NoGazeFrames : DataError {
  using DataError::DataError;
};

struct EmptyInput : DataError {
  using DataError::DataError;
};

struct EmptySubset : DataError {
  using DataError::DataError;
};

struct TooFewParticipants : DataError {
  using DataError::DataError;
};

struct TooFewPoints : DataError {
  using DataError::DataError;
};

// Violated precondition that has no dedicated error above.
struct PreconditionError : DataError {
  using DataError::DataError;
};

// --- compute errors ---

struct NoConvergence : ComputeError {
  long iterations;
  explicit NoConvergence(long iterations_)
      : ComputeError("solver did not converge within " + std::to_string(iterations_) +
                     " iterations"),
        iterations(iterations_) {}
};

struct DegenerateKernel : ComputeError {
  using ComputeError::ComputeError;
};

struct ShapeError : ComputeError {
  using ComputeError::ComputeError;
};

struct DimensionMismatch : ComputeError {
  using ComputeError::ComputeError;
};

struct NonFiniteLoss : ComputeError {
  using ComputeError::ComputeError;
};

struct NotFitted : ComputeError {
  using ComputeError::ComputeError;
};

}  // namespace persref
