#pragma once

#include <iosfwd>

namespace nsg::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kIdentityFailure = 3,
};

/// Entry point behind the `nsg` binary; writes to the given streams instead
/// of stdout/stderr so it can be driven in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nsg::cli
