#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zfort::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kInputError = 2, kCapExceeded = 3 };

enum class Format { kText, kJson };

struct RunConfig {
  std::size_t enumeration_cap = 20;
  std::size_t search_cap = 20;
  std::size_t workers = 1;
  Format format = Format::kText;
  std::uint64_t seed = 1;
};

/// Parses argv (argv[0] is the program name) and runs one command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zfort::cli
