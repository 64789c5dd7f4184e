#pragma once

#include <iosfwd>

namespace lctkit::cli {

enum ExitStatus : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Parses argv and runs one verb. Results go to `out`; warnings, errors and
/// replayable failure instances go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lctkit::cli
