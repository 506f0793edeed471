#pragma once

#include <string>

namespace holder {

inline constexpr const char* tool_version = "0.1.0";

/// Exit codes of the `holder` tool.
enum ExitCode : int { exit_ok = 0, exit_usage = 2, exit_degenerate = 3 };

/// Entry point of the `holder` tool: gen, analyze, verify, criterion.
int run_cli(int argc, const char* const* argv);

/// Parses "65536" or "2^16".
long parse_count(const std::string& s);

} // namespace holder
