// Acceptance runner: executes the full criterion battery, prints one
// pass/fail line per criterion with its runtime, and exits nonzero if any
// criterion fails or overruns its budget.

#include <cstdio>
#include <string>
#include <vector>

#include "spin7/selfcheck.hpp"

int main() {
  const std::vector<spin7::CriterionResult> results = spin7::run_selfcheck();

  // per-criterion runtime budgets (seconds); 0 = no budget stated
  const std::vector<double> budgets = {1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 10.0, 60.0, 300.0};

  bool all_ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    bool ok = r.pass;
    std::string note = r.detail;
    if (i < budgets.size() && budgets[i] > 0.0 && r.seconds > budgets[i]) {
      ok = false;
      note += " [exceeded " + std::to_string(budgets[i]) + " s budget]";
    }
    std::printf("criterion %d [%s]: %s (%.2fs) %s\n", r.id, r.name.c_str(),
                ok ? "PASS" : "FAIL", r.seconds, note.c_str());
    all_ok = all_ok && ok;
  }

  const bool scoreboard_ok = spin7::all_pass(results);
  std::printf("criterion 10 [selfcheck scoreboard]: %s\n", scoreboard_ok ? "PASS" : "FAIL");
  all_ok = all_ok && scoreboard_ok;

  std::printf("acceptance: %s\n", all_ok ? "ALL PASS" : "FAILURES PRESENT");
  return all_ok ? 0 : 1;
}
