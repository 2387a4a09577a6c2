#pragma once

// Named verification suites mirroring the acceptance checks; each check is
// independently runnable from the CLI and reports expected vs actual on
// failure. Output ordering is deterministic (sorted by check name).

#include <cstddef>
#include <string>
#include <vector>

#include "moduli/genfun.hpp"

namespace moduli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // value summary, or expected-vs-actual on failure
};

// series-algebra, quotients-vs-oracle, strata, k1, k2, trees.
std::vector<std::string> verify_suite_names();

// Runs one suite ("all" = every suite); results sorted by check name.
std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          std::size_t order = kDefaultOrder);

}  // namespace moduli
