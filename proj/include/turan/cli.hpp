#pragma once

#include <ostream>

namespace turan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command line. Results go to `out`; usage errors go to `err`. Domain errors are
/// reported on `out` as a JSON object with an "error" member.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace turan::cli
