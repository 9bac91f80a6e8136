#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `vcc` invocation. `args` excludes the program name. Graph input
/// comes from the named file, or from `in` when the file is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vcc::cli
