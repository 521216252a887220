// The `fieldunits` command line. Exit status: 0 success, 1 domain error (or
// a failed check), 2 usage or parse error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fieldunits {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fieldunits
