#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpois::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name). Machine-readable output
/// goes to `out` (or --output), diagnostics to `err`.
///
///   table  --kind K [--lambda L] --n-max N [--format csv|json] [--float]
///   poly   --family F [--lambda L] --x X (--n N | --n-max N) [--format csv|json] [--float]
///   pmf    --lambda L --alpha A --upto N [--truncated] [--format csv|json] [--float]
///   sample --lambda L --alpha A --count C [--seed S] [--truncated]
///   verify [--suite exact-default|point|mc] [--lambda L --alpha A] [--n-max N]
///          [--seed S] [--count C] [--sigmas K]
///
/// Every command accepts --output PATH. Exit codes: 0 success, 1 failed
/// verification, 2 usage or regime error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpois::cli
