#pragma once
// walks-lab command line: argument handling and routing, separate from main
// so the golden tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace walks::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Writes one JSON document to `out` (or the
// --out file) and diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace walks::cli
