#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antireg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< runtime, I/O or invariant failure
inline constexpr int kExitUsage = 2;

inline constexpr std::size_t kDefaultOracleCap = 24;

/// Subcommands: generate | spectrum | verify | sweep. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace antireg
