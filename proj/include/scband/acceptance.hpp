#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scband {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

// Runs the full regression battery; each criterion is independent and
// reports its measured values in `detail`.
std::vector<CriterionResult> run_acceptance();

// Prints one PASS/FAIL line per criterion; returns 0 when all pass.
int run_acceptance(std::ostream& os);

}  // namespace scband
