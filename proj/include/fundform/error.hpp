#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fundform {

/// Malformed or degenerate input (empty matrices, duplicate points,
/// non-unimodular maps, missing fields).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold
/// (e.g. a polygon with fewer than six lattice points passed to the
/// classifier, or lw(P) >= m for the hyperplane-stack witness).
class HypothesisFailed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configurable search or enumeration budget was exhausted.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure inside one stage of the weighted projective space pipeline; the
/// stage name is kept so callers can report where the pipeline stopped.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace fundform
