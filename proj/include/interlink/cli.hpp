#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace interlink
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitVerification = 4;

/// Parses args (args[0] is the program name), runs one subcommand and writes
/// its records to out. Diagnostics go to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace interlink
