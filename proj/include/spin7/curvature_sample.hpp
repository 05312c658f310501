#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <vector>

#include "spin7/complex_structure.hpp"

namespace spin7 {

// Pointwise curvature of a unitary connection: one skew-Hermitian r x r
// matrix per 2-form basis element.
struct CurvatureSample {
  int rank = 2;
  std::vector<Eigen::MatrixXcd> components;  // 28 entries

  CurvatureSample() = default;
  CurvatureSample(int r, std::vector<Eigen::MatrixXcd> comps);

  static CurvatureSample zero(int r);
  // sample with the given 2-form shape in a single algebra direction
  static CurvatureSample from_form(const KForm& alpha, const Eigen::MatrixXcd& algebra_element);
};

// orthonormal real basis of skew-Hermitian r x r matrices (r^2 elements)
std::vector<Eigen::MatrixXcd> skew_hermitian_basis(int r);

// real coefficients of `f` over skew_hermitian_basis(r): one 2-form per
// algebra basis element
std::vector<KForm> algebra_components(const CurvatureSample& f);

double pi7_norm(const CurvatureSample& f);

struct HEReport {
  bool hypothesis_holds = false;  // vanishing (0,2) part and omega-trace
  double part02_norm = 0.0;
  double trace_norm = 0.0;
  double pi7_norm = 0.0;
  bool holds = false;  // hypothesis -> pi7 vanishes (vacuously true otherwise)
};

HEReport he_implies_instanton(const ComplexStructure& cs, const CurvatureSample& f,
                              double tol = 1e-10);

// (|| (1 + star_theta) f^{0,2} ||, || Lambda f^{1,1} ||); both vanish iff
// pi7(f) = 0
std::pair<double, double> complex_asd_residual(const ComplexStructure& cs,
                                               const CurvatureSample& f);

nlohmann::json curvature_sample_to_json(const CurvatureSample& f);
CurvatureSample curvature_sample_from_json(const nlohmann::json& j);

}  // namespace spin7
