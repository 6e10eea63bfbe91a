#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace shallow::cli {

inline constexpr const char* kVersion = "0.1.0";

// FNV-1a 64-bit, rendered as 16 hex digits.
std::string fingerprint(const std::string& text);

// Runs one subcommand (args exclude the program name). Returns 0 on success,
// 1 on domain errors and 2 on usage errors. Graph and decomposition artifacts
// go to `out` unless --out names a file; the JSON run report goes to `out`
// when no artifact does, and to `err` otherwise.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace shallow::cli
