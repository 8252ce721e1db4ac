#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tripart {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertionFailed = 1;
inline constexpr int kExitUsage = 2;

/// Every flag may also come from the environment as TRIPART_<FLAG>, e.g.
/// TRIPART_SEED or TRIPART_CACHE_DIR. Flags win over the environment.
inline constexpr const char* kEnvPrefix = "TRIPART_";

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`. Returns 0 when every verdict passed, 1 when
/// some assertion failed and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tripart
