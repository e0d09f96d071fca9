#pragma once

#include <stdexcept>
#include <string>

namespace fracfs {

enum class ErrorKind {
  Domain,
  Overflow,
  NonConvergence,
  Range,
  GridMismatch,
  Coverage,
  Validation,
  Syntax,
  Io,
  NotFound,
  SingularStep,
};

const char* to_string(ErrorKind kind) noexcept;

// All library failures surface as this one exception type; `kind()` is what
// the C API and the CLI map onto status and exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fracfs
