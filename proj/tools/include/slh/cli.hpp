#pragma once

// Command line front end: parses arguments, runs one experiment and writes a
// JSON or CSV report.

#include <iosfwd>
#include <string>
#include <vector>

#include "slh/serialize.hpp"

namespace slh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitNumerical = 4;

/// args excludes the program name. The report goes to `out` unless --out is
/// given; diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Report document: a metadata block (version, command, seed, config hash,
/// config) followed by "data". Output-only fields (out, format, threads) are
/// left out of the config and its hash.
io::Json make_report(const std::string& command, const io::Json& parameters, const io::Json& data);

/// "json": indented JSON with 17-digit floats. "csv": "key,value" rows with
/// nested keys joined by '.'. Throws InvalidArgument for other formats.
std::string emit_report(const io::Json& report, const std::string& format);

}  // namespace slh::cli
