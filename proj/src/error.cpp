#include "fracfs/error.hpp"

namespace fracfs {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::Range: return "range";
    case ErrorKind::GridMismatch: return "grid-mismatch";
    case ErrorKind::Coverage: return "coverage";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::Io: return "io";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::SingularStep: return "singular-step";
  }
  return "unknown";
}

}  // namespace fracfs
