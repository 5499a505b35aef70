#pragma once

// The `alg` command line: construct, check, decide, table, suite, fuzz.

#include <string>
#include <vector>

#include "nalg/algebra.hpp"

namespace nalg::cli {

struct CommandResult {
  int exit_code = 0;   // 0 verdict or success, 2 Unknown, 1 error
  std::string output;  // standard output
  std::string error;   // diagnostics
};

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

/// Element written in basis names, e.g. "1+x-y", "2u", "-k"; residues above
/// p/2 are shown as negatives.
std::string format_element(const Algebra& a, const Element& x);

/// Basis multiplication table, one row per left factor.
std::vector<std::vector<std::string>> table_cells(const Algebra& a);

} // namespace nalg::cli
