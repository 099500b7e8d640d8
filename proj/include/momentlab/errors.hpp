#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momentlab {

// Malformed input text. Carries the character offset of the problem.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Argument outside an operation's stated domain (e.g. |t|*M too close to 1).
class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric failure: iteration caps, poles on the contour, blocked paths.
class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NoConvergenceError : public NumericError {
  using NumericError::NumericError;
};

class PoleOnContourError : public NumericError {
  using NumericError::NumericError;
};

class PathBlockedError : public NumericError {
  using NumericError::NumericError;
};

class StepUnderflowError : public NumericError {
  using NumericError::NumericError;
};

class RootResidualError : public NumericError {
  using NumericError::NumericError;
};

class CoincidentRootsError : public NumericError {
  using NumericError::NumericError;
};

class InsufficientDataError : public NumericError {
  using NumericError::NumericError;
};

class FitDegenerateError : public NumericError {
  using NumericError::NumericError;
};

// Exact-arithmetic growth hit a configured cap.
class ResourceLimitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace momentlab
