#pragma once

#include <stdexcept>
#include <string>

namespace latcodes {

enum class ErrorKind {
  InvalidDimension,
  NotInGraph,
  ArityMismatch,
  WindowTooSmall,
  Characterization,  // divisibility condition of a construction not met
  NotPartition,
  NotPds,
  Applicability,
  GuardExceeded,
  Parse,
  Schema,
  ConstructionBug,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latcodes
