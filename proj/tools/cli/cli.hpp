#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "table.hpp"

namespace gjt::cli {

/// Runs one gjt command. `args` excludes the program name. Returns the process
/// exit status: 0 on success, 1 when a reproduce check fails, 2 on usage or
/// parameter errors (diagnostic written to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One verification grid with a pass/fail verdict per row.
struct ReproduceReport {
  Table table;
  std::size_t passed = 0;
  std::size_t total = 0;
  bool ok() const { return passed == total; }
};

std::vector<std::string_view> reproduce_targets();

/// Throws std::invalid_argument listing the available targets for unknown names.
ReproduceReport reproduce(std::string_view target);

}  // namespace gjt::cli
