#include "spin7/kform_json.hpp"

#include <stdexcept>

namespace spin7 {

using nlohmann::json;

json kform_to_json(const KForm& a) {
  json terms = json::array();
  const auto& masks = basis_masks(a.grade);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const double c = a.coeffs[static_cast<Eigen::Index>(i)];
    if (c == 0.0) continue;
    terms.push_back({{"idx", MultiIndex::from_mask(masks[i]).axes}, {"c", c}});
  }
  return json{{"grade", a.grade}, {"terms", terms}};
}

KForm kform_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("KForm json: expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "grade" && key != "terms")
      throw std::invalid_argument("KForm json: unknown key '" + key + "'");
  }
  if (!j.contains("grade") || !j.at("grade").is_number_integer())
    throw std::invalid_argument("KForm json: field 'grade' must be an integer");
  const int grade = j.at("grade").get<int>();
  KForm f = KForm::zero(grade);
  if (!j.contains("terms")) return f;
  if (!j.at("terms").is_array()) throw std::invalid_argument("KForm json: field 'terms' must be an array");
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("idx") || !term.contains("c"))
      throw std::invalid_argument("KForm json: each term needs fields 'idx' and 'c'");
    for (const auto& [key, value] : term.items()) {
      (void)value;
      if (key != "idx" && key != "c")
        throw std::invalid_argument("KForm json: unknown term key '" + key + "'");
    }
    const auto idx = term.at("idx").get<std::vector<int>>();
    MultiIndex mi(idx);  // validates increasing / range
    if (mi.grade() != grade)
      throw std::invalid_argument("KForm json: term 'idx' length differs from 'grade'");
    if (!term.at("c").is_number()) throw std::invalid_argument("KForm json: field 'c' must be a number");
    f.coeffs[mi.rank()] += term.at("c").get<double>();
  }
  return f;
}

json matrix8_to_json(const Eigen::Matrix<double, 8, 8>& m) {
  json rows = json::array();
  for (int i = 0; i < 8; ++i) {
    json row = json::array();
    for (int k = 0; k < 8; ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

Eigen::Matrix<double, 8, 8> matrix8_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8) throw std::invalid_argument("matrix json: expected 8 rows");
  Eigen::Matrix<double, 8, 8> m;
  for (int i = 0; i < 8; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != 8) throw std::invalid_argument("matrix json: expected 8 columns");
    for (int k = 0; k < 8; ++k) m(i, k) = row.at(static_cast<std::size_t>(k)).get<double>();
  }
  return m;
}

}  // namespace spin7
