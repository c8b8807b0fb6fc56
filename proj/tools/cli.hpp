#pragma once

#include <iosfwd>

namespace degenkit::cli {

/// Exit codes: 0 success, 1 domain error (violations, NotKulikov, a false
/// check), 2 input error (I/O, parse, invalid catalog, usage).
enum ExitCode : int { kOk = 0, kDomainError = 1, kInputError = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace degenkit::cli
