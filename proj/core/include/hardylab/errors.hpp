#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

/// Raised when an operator matrix fails the extended-eigenoperator recurrence.
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularSymbol : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The symbol has a nonzero constant term, so ker(A) does not contain the constants.
class KernelHypothesisFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures of a numerical procedure on otherwise valid input.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product factor argument left the open unit disk.
class DomainEscape : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

class NotConvergent : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

/// |f| stayed below the zero tolerance on every perturbed contour.
class OnCircleZero : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

class SMapUndefined : public NumericFailure {
 public:
  using NumericFailure::NumericFailure;
};

}  // namespace hardylab
