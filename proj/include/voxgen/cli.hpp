#pragma once

#include <ostream>

namespace voxgen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation and I/O errors
inline constexpr int kExitUsage = 2;

/// Entry point of the `voxgen` tool. Errors are reported on `err` as one
/// line: "voxgen: error: <kind>: <message>".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace voxgen::cli
