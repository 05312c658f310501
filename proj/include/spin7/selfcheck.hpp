#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace spin7 {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

// The nine checks behind `selfcheck`: eigenstructure, projection formula,
// Cayley identities, the order-8 group, complex-ASD dimensions, index
// arithmetic, gluing scalings, and the two lattice solver batteries.
std::vector<CriterionResult> run_selfcheck();

nlohmann::json selfcheck_to_json(const std::vector<CriterionResult>& results);
bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace spin7
