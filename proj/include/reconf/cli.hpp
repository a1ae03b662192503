#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reconf::cli {

inline constexpr const char* tool_name = "reconf";
inline constexpr const char* tool_version = "0.1.0";

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

/// Runs one command line (without the program name). JSON goes to `out`
/// unless an output file is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64-bit digest rendered as "fnv1a64:<16 hex digits>".
std::string digest(const std::string& bytes);

} // namespace reconf::cli
