#pragma once

#include <string>
#include <vector>

// Golden and property suites, shared by `strata verify` and the acceptance binary.

namespace strata {

struct Check {
  std::string criterion;  // acceptance criterion this check counts towards, e.g. "G3"
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool passed() const;
};

// sect72, sect71, remark, torsion, braid, laurent, decat, propP.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name);

struct Criterion {
  std::string id;
  std::string suite;
  std::string description;
};
const std::vector<Criterion>& acceptance_criteria();

}  // namespace strata
