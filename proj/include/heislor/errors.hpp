#pragma once

#include <stdexcept>
#include <string>

namespace heislor {

/// Base class of every failure raised by the library. Domain errors derive from
/// it so callers (the CLI in particular) can tell them apart from misuse.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad epsilon, empty plan, tiny grid).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ChartSingular : public Error {
 public:
  using Error::Error;
};

class OutsideCausalShadow : public Error {
 public:
  using Error::Error;
};

/// An iterative solver gave up. `best_residual` is the smallest residual seen.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class PlanFailure : public Error {
 public:
  using Error::Error;
};

class NotCausal : public Error {
 public:
  using Error::Error;
};

class IllConditioned : public Error {
 public:
  using Error::Error;
};

}  // namespace heislor
