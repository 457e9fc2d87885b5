#pragma once

#include <stdexcept>
#include <string>

namespace untrapped {

/// Bad argument to a constructor or operation (non-positive radius, coarse grid, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fourier mode index that is not a half-integer.
class InvalidMode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation requested too close to a profile pole.
class PoleProximity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method failed to converge; message carries the trace.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem hypothesis required by the operation does not hold.
class PreconditionViolation : public std::runtime_error {
 public:
  PreconditionViolation(std::string hypothesis, const std::string& detail)
      : std::runtime_error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Scenario or data file failed to parse; `pointer` is the JSON pointer of the offender.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string pointer, const std::string& detail)
      : std::runtime_error(pointer + ": " + detail), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace untrapped
