#include "seqstate/error.hpp"

namespace seqstate {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Range: return "range error";
    case ErrorKind::Capacity: return "capacity error";
    case ErrorKind::Numeric: return "numeric error";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Format: return "format error";
    case ErrorKind::Storage: return "storage error";
  }
  return "error";
}

}  // namespace seqstate
