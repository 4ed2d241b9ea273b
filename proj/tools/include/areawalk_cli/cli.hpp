#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace areawalk::cli {

/// Exit codes: 0 success, 1 a cross-check disagreed, 2 bad arguments.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// |v| < 1e-9 prints as 0, anything else with %.12g.
std::string format_real(double v);

}  // namespace areawalk::cli
