#include "voxgen/error.hpp"

namespace voxgen {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyBox: return "empty_box";
    case ErrorKind::DuplicateId: return "duplicate_id";
    case ErrorKind::OutOfBounds: return "out_of_bounds";
    case ErrorKind::DanglingConnection: return "dangling_connection";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::RetryExhausted: return "retry_exhausted";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Frozen: return "frozen";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::NonMonotonicTrace: return "non_monotonic_trace";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace voxgen
