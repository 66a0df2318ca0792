#pragma once

#include <iosfwd>

namespace optbranch {

/// Entry point of the `optbranch` tool with subcommands solve, discover and
/// bench. Returns 0 on success, 2 on bad input or usage, 1 on internal
/// failure. Logging verbosity comes from OPTBRANCH_LOG (off, info, debug).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace optbranch
