#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fr1d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitBlowUp = 2;

/// Runs one of the subcommands run, compare, eoc or scan. `args` excludes the
/// program name. Returns 0 on success, 1 for invalid input or I/O failure
/// (message on `err`), 2 on numerical blow-up (partial CSV written first).
int parse_and_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fr1d::cli
