#pragma once

#include <iosfwd>

namespace magic::cli {

/// Parses argv, runs one subcommand and writes data to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace magic::cli
