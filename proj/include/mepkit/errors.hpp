#pragma once

#include <stdexcept>
#include <string>

namespace mepkit {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller violated an operation precondition (dimension mismatch, bad argument).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& msg) : Error(msg) {}
};

/// A time integration or relaxation produced a non-finite state.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& msg, long step) : Error(msg), step_index(step) {}
  long step_index;
};

/// An iterative solver hit its iteration cap before reaching tolerance.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& msg, double residual)
      : Error(msg), last_residual(residual) {}
  double last_residual;
};

/// Too few samples/events for the requested statistical estimate.
class InsufficientStatisticsError : public Error {
 public:
  InsufficientStatisticsError(const std::string& msg, long count)
      : Error(msg), observed_count(count) {}
  long observed_count;
};

/// A geometric construction (saddle refinement, phase-space path) failed.
class ConstructionError : public Error {
 public:
  explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

/// Bad configuration file or CLI usage.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace mepkit
