#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptolemy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. `args` excludes the program name. Results go to
// `out`, diagnostics to `err`; `in` backs `--in -`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

// PTOLEMY_MAX_BRUTE_N, defaulting to 9; throws on unparsable values.
int max_brute_n_from_env();

}  // namespace ptolemy::cli
