#pragma once

#include <ostream>

namespace superstring {

/// Entry point behind the command-line binary; split out so tests can drive
/// the whole pipeline in-process. Returns the process exit code: 0 for
/// success (yes/no answers live in the JSON), 2 for input or contract
/// errors, 3 for capacity errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace superstring
