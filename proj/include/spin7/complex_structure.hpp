#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spin7/gamma8.hpp"
#include "spin7/kform.hpp"

namespace spin7 {

using Complex = std::complex<double>;
using Vector6c = Eigen::Matrix<Complex, 6, 1>;
using Vector16c = Eigen::Matrix<Complex, 16, 1>;

// An SU(4) structure on R^8 compatible with the Cayley form: complex
// coordinates, Kahler form, holomorphic volume, and the change-of-basis
// machinery for (p,q)-types of 2-forms.
class ComplexStructure {
 public:
  static ComplexStructure standard(Convention c);

  // custom Kahler form (for negative controls); dz rows stay from `c`
  static ComplexStructure with_kahler_form(Convention c, const KForm& omega);

  Convention convention() const { return convention_; }
  const Eigen::Matrix<double, 8, 8>& j_matrix() const { return j_matrix_; }
  const KForm& kahler_form() const { return kahler_form_; }
  const KForm& theta_re() const { return theta_re_; }
  const KForm& theta_im() const { return theta_im_; }

  // complex coefficients of a real 2-form in the basis
  //   dz_a^dz_b (a<b) | dz_a^dzbar_b (all a,b) | dzbar_a^dzbar_b (a<b)
  struct PQCoefficients {
    Vector6c part20;
    Vector16c part11;
    Vector6c part02;
  };
  PQCoefficients pq_coefficients(const KForm& alpha) const;

  // real 2-form with the given pure-type complex coefficients
  KForm real_form_from_02(const Vector6c& c02) const;  // c02 terms + conjugates
  KForm form_from_11(const Vector16c& c11) const;      // must be conj-symmetric

  Complex omega_trace(const KForm& alpha) const;  // <alpha, omega>/<omega, omega>

 private:
  Convention convention_;
  Eigen::Matrix<double, 8, 8> j_matrix_;
  KForm kahler_form_;
  KForm theta_re_, theta_im_;
  Eigen::Matrix<Complex, 4, 8> dz_;             // rows of dz_a in the dx basis
  Eigen::Matrix<Complex, 28, 28> to_real_;      // complex-basis -> tau-basis
  Eigen::PartialPivLU<Eigen::Matrix<Complex, 28, 28>> lu_;

  ComplexStructure() : kahler_form_(KForm::zero(2)), theta_re_(KForm::zero(4)), theta_im_(KForm::zero(4)) {}
  void build(Convention c);
};

// Decomposition of a real 2-form under the complex structure.
struct PQDecomposition {
  Vector6c part20;
  Vector16c part11;
  Vector6c part02;
  double trace_coeff = 0.0;  // trace_part = trace_coeff * omega
  KForm trace_part;
  KForm traceless11;
  KForm offdiagonal;  // real (2,0)+(0,2) part

  KForm reconstruct() const { return trace_part + traceless11 + offdiagonal; }
};

PQDecomposition decompose_pq(const ComplexStructure& cs, const KForm& alpha);

// anti-linear involution on (0,2)-forms defined by
// phi ^ star_theta(psi) = <phi, psi> conj(theta)
Vector6c star_theta(const ComplexStructure& cs, const Vector6c& phi);

struct SplitMatchReport {
  bool match = false;
  int dim_traceless11 = 0;
  int dim_minus = 0;  // real dimension of the P^{0,2}_- block
  int dim_omega = 1;
  int dim_plus = 0;   // real dimension of the P^{0,2}_+ block
  double max_angle_7 = 0.0;   // largest principal angle, 7-side
  double max_angle_21 = 0.0;  // largest principal angle, 21-side
};

// Checks that R<omega> + (self-dual 0,2 block) spans the eigenvalue-3 space
// and traceless (1,1) + (anti-self-dual 0,2 block) spans the eigenvalue -1
// space, to principal angles below 1e-9.
SplitMatchReport verify_split_match(const ComplexStructure& cs);

}  // namespace spin7
