#pragma once

#include <json.hpp>

#include "spin7/kform.hpp"

namespace spin7 {

// {"grade": k, "terms": [{"idx": [i,j,...], "c": value}, ...]}
// idx strictly increasing, 1-based; omitted terms are zero.
nlohmann::json kform_to_json(const KForm& a);
KForm kform_from_json(const nlohmann::json& j);

nlohmann::json matrix8_to_json(const Eigen::Matrix<double, 8, 8>& m);
Eigen::Matrix<double, 8, 8> matrix8_from_json(const nlohmann::json& j);

}  // namespace spin7
