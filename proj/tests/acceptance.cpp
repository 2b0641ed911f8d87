// One PASS/FAIL line per acceptance criterion. All comparisons are exact over
// the rationals, so the pinned tolerance is zero everywhere.

#include <cstdio>
#include <map>

#include "strata/verify.hpp"

using namespace strata;

int main() {
  std::map<std::string, SuiteReport> reports;
  for (const auto& name : suite_names()) reports.emplace(name, run_suite(name));

  int failed = 0;
  for (const auto& c : acceptance_criteria()) {
    const SuiteReport& r = reports.at(c.suite);
    int total = 0, bad = 0;
    std::string first_failure;
    for (const auto& check : r.checks) {
      if (check.criterion != c.id) continue;
      ++total;
      if (!check.pass) {
        if (bad++ == 0) first_failure = check.name + ": " + check.detail;
      }
    }
    bool pass = total > 0 && bad == 0;
    if (!pass) ++failed;
    std::printf("%s %s tol=exact checks=%d/%d suite=%s %s%s%s\n", c.id.c_str(), pass ? "PASS" : "FAIL", total - bad,
                total, c.suite.c_str(), c.description.c_str(), first_failure.empty() ? "" : " | ",
                first_failure.c_str());
  }
  std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
