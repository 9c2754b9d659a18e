#pragma once

#include <iosfwd>

namespace cliffexp::cli {

/// Parses argv and runs one of the eval / compare / spin subcommands.
/// Returns the process exit status; library errors go to `err` with status 1.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cliffexp::cli
