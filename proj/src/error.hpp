#pragma once

#include <stdexcept>
#include <string>

namespace chiralswitch {

enum class Status {
  Ok = 0,
  InvalidArgument,
  InvalidConfig,
  DegenerateSteadyState,
  StiffSystem,
  NoSeed,
  NoConvergence,
  UndefinedEstimate,
  DegeneratePerturbation,
  NoCrossing,
  Io,
  Internal,
};

const char* status_name(Status s);

/// Error thrown by all library entry points; carries a Status that maps 1:1
/// onto the C API error codes.
class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}

  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& message) {
  throw Error(status, message);
}

}  // namespace chiralswitch
