#include "spin7/curvature_sample.hpp"

#include <cmath>
#include <stdexcept>

#include "spin7/two_form_split.hpp"

namespace spin7 {

CurvatureSample::CurvatureSample(int r, std::vector<Eigen::MatrixXcd> comps)
    : rank(r), components(std::move(comps)) {
  if (rank < 1) throw std::invalid_argument("CurvatureSample: rank must be >= 1");
  if (components.size() != 28)
    throw std::invalid_argument("CurvatureSample: expected 28 components");
  for (const auto& m : components) {
    if (m.rows() != rank || m.cols() != rank)
      throw std::invalid_argument("CurvatureSample: component size mismatch");
    if ((m + m.adjoint()).lpNorm<Eigen::Infinity>() > 1e-9)
      throw std::invalid_argument("CurvatureSample: components must be skew-Hermitian");
  }
}

CurvatureSample CurvatureSample::zero(int r) {
  return CurvatureSample(r, std::vector<Eigen::MatrixXcd>(28, Eigen::MatrixXcd::Zero(r, r)));
}

CurvatureSample CurvatureSample::from_form(const KForm& alpha, const Eigen::MatrixXcd& m) {
  if (alpha.grade != 2) throw std::invalid_argument("from_form: alpha must have grade 2");
  std::vector<Eigen::MatrixXcd> comps(28);
  for (int b = 0; b < 28; ++b) comps[static_cast<std::size_t>(b)] = alpha.coeffs[b] * m;
  return CurvatureSample(static_cast<int>(m.rows()), std::move(comps));
}

std::vector<Eigen::MatrixXcd> skew_hermitian_basis(int r) {
  std::vector<Eigen::MatrixXcd> basis;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < r; ++k) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, r);
    m(k, k) = Complex(0, 1);
    basis.push_back(m);
  }
  for (int k = 0; k < r; ++k) {
    for (int l = k + 1; l < r; ++l) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, r);
      m(k, l) = inv_sqrt2;
      m(l, k) = -inv_sqrt2;
      basis.push_back(m);
      m.setZero();
      m(k, l) = Complex(0, inv_sqrt2);
      m(l, k) = Complex(0, inv_sqrt2);
      basis.push_back(m);
    }
  }
  return basis;
}

std::vector<KForm> algebra_components(const CurvatureSample& f) {
  const auto basis = skew_hermitian_basis(f.rank);
  std::vector<KForm> out;
  out.reserve(basis.size());
  for (const auto& xi : basis) {
    KForm g = KForm::zero(2);
    for (int b = 0; b < 28; ++b)
      g.coeffs[b] = (f.components[static_cast<std::size_t>(b)].cwiseProduct(xi.conjugate())).sum().real();
    out.push_back(std::move(g));
  }
  return out;
}

double pi7_norm(const CurvatureSample& f) {
  double sq = 0.0;
  for (const auto& g : algebra_components(f)) sq += project7_formula(g).coeffs.squaredNorm();
  return std::sqrt(sq);
}

HEReport he_implies_instanton(const ComplexStructure& cs, const CurvatureSample& f, double tol) {
  HEReport rep;
  double sq02 = 0.0, sqtr = 0.0, sq7 = 0.0;
  for (const auto& g : algebra_components(f)) {
    sq02 += cs.pq_coefficients(g).part02.squaredNorm();
    sqtr += std::norm(cs.omega_trace(g));
    sq7 += project7_formula(g).coeffs.squaredNorm();
  }
  rep.part02_norm = std::sqrt(sq02);
  rep.trace_norm = std::sqrt(sqtr);
  rep.pi7_norm = std::sqrt(sq7);
  rep.hypothesis_holds = rep.part02_norm <= tol && rep.trace_norm <= tol;
  rep.holds = !rep.hypothesis_holds || rep.pi7_norm <= tol;
  return rep;
}

std::pair<double, double> complex_asd_residual(const ComplexStructure& cs,
                                               const CurvatureSample& f) {
  double sq02 = 0.0, sqtr = 0.0;
  for (const auto& g : algebra_components(f)) {
    const Vector6c c02 = cs.pq_coefficients(g).part02;
    sq02 += (c02 + star_theta(cs, c02)).squaredNorm();
    sqtr += std::norm(cs.omega_trace(g));
  }
  return {std::sqrt(sq02), std::sqrt(sqtr)};
}

using nlohmann::json;

json curvature_sample_to_json(const CurvatureSample& f) {
  json comps = json::array();
  for (const auto& m : f.components) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
      rows.push_back(row);
    }
    comps.push_back(rows);
  }
  return json{{"rank", f.rank}, {"components", comps}};
}

CurvatureSample curvature_sample_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("CurvatureSample json: expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "rank" && key != "components")
      throw std::invalid_argument("CurvatureSample json: unknown key '" + key + "'");
  }
  if (!j.contains("rank") || !j.at("rank").is_number_integer())
    throw std::invalid_argument("CurvatureSample json: field 'rank' must be an integer");
  const int r = j.at("rank").get<int>();
  if (!j.contains("components") || !j.at("components").is_array() || j.at("components").size() != 28)
    throw std::invalid_argument("CurvatureSample json: field 'components' must be an array of 28 matrices");
  std::vector<Eigen::MatrixXcd> comps;
  for (const auto& rows : j.at("components")) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != r)
      throw std::invalid_argument("CurvatureSample json: matrix row count mismatch");
    Eigen::MatrixXcd m(r, r);
    for (int i = 0; i < r; ++i) {
      const auto& row = rows.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<int>(row.size()) != r)
        throw std::invalid_argument("CurvatureSample json: matrix column count mismatch");
      for (int k = 0; k < r; ++k) {
        const auto& ent = row.at(static_cast<std::size_t>(k));
        if (!ent.is_array() || ent.size() != 2)
          throw std::invalid_argument("CurvatureSample json: entries must be [re, im] pairs");
        m(i, k) = Complex(ent.at(0).get<double>(), ent.at(1).get<double>());
      }
    }
    comps.push_back(std::move(m));
  }
  return CurvatureSample(r, std::move(comps));
}

}  // namespace spin7
