#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ksplit::cli {

/// Ordered "key: value" lines printed by every command.
struct RunReport {
  std::vector<std::pair<std::string, std::string>> lines;

  void add(std::string key, std::string value) { lines.emplace_back(std::move(key), std::move(value)); }
  void print(std::ostream& os) const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ksplit::cli
