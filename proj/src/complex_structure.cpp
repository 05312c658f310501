#include "spin7/complex_structure.hpp"

#include <array>
#include <stdexcept>

#include "spin7/two_form_split.hpp"

namespace spin7 {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// complement pair and Levi-Civita sign for star_theta: e_ij -> sign * conj e_kl
constexpr std::array<std::pair<int, int>, 6> kStarTable = {{{5, +1}, {4, -1}, {3, +1}, {2, +1}, {1, -1}, {0, +1}}};

Eigen::Matrix<Complex, 28, 1> two_form_from_pair(const Eigen::Matrix<Complex, 1, 8>& u,
                                                 const Eigen::Matrix<Complex, 1, 8>& v) {
  Eigen::Matrix<Complex, 28, 1> out;
  const auto& masks = basis_masks(2);
  for (int r = 0; r < 28; ++r) {
    const auto axes = MultiIndex::from_mask(masks[static_cast<std::size_t>(r)]).axes;
    const int k = axes[0] - 1, l = axes[1] - 1;
    out[r] = u[k] * v[l] - u[l] * v[k];
  }
  return out;
}

KForm four_form_from_rows(const Eigen::Matrix<Complex, 4, 8>& p, bool imaginary_part) {
  KForm f = KForm::zero(4);
  const auto& masks = basis_masks(4);
  for (std::size_t r = 0; r < masks.size(); ++r) {
    const auto axes = MultiIndex::from_mask(masks[r]).axes;
    Eigen::Matrix<Complex, 4, 4> sub;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) sub(i, j) = p(i, axes[static_cast<std::size_t>(j)] - 1);
    const Complex d = sub.determinant();
    f.coeffs[static_cast<Eigen::Index>(r)] = imaginary_part ? d.imag() : d.real();
  }
  return f;
}

}  // namespace

void ComplexStructure::build(Convention c) {
  convention_ = c;
  dz_.setZero();
  if (c == Convention::I) {
    dz_(0, 0) = 1; dz_(0, 1) = Complex(0, 1);
    dz_(1, 2) = 1; dz_(1, 3) = Complex(0, 1);
    dz_(2, 4) = 1; dz_(2, 5) = Complex(0, 1);
    dz_(3, 6) = 1; dz_(3, 7) = Complex(0, 1);
  } else {
    dz_(0, 0) = -1; dz_(0, 2) = Complex(0, 1);
    dz_(1, 1) = 1;  dz_(1, 3) = Complex(0, 1);
    dz_(2, 4) = -1; dz_(2, 6) = Complex(0, 1);
    dz_(3, 5) = 1;  dz_(3, 7) = Complex(0, 1);
  }
  j_matrix_ = c == Convention::I ? gamma8_generator_alpha(c).matrix
                                 : gamma8_generator_beta(c).matrix;

  Eigen::Matrix<Complex, 28, 1> om = Eigen::Matrix<Complex, 28, 1>::Zero();
  for (int a = 0; a < 4; ++a)
    om += Complex(0, 0.5) * two_form_from_pair(dz_.row(a), dz_.row(a).conjugate());
  kahler_form_ = KForm::zero(2);
  kahler_form_.coeffs = om.real();

  theta_re_ = four_form_from_rows(dz_, false);
  theta_im_ = four_form_from_rows(dz_, true);

  // columns: 6 x dz^dz | 16 x dz^dzbar | 6 x dzbar^dzbar
  int col = 0;
  for (const auto& [a, b] : kPairs)
    to_real_.col(col++) = two_form_from_pair(dz_.row(a), dz_.row(b));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      to_real_.col(col++) = two_form_from_pair(dz_.row(a), dz_.row(b).conjugate());
  for (const auto& [a, b] : kPairs)
    to_real_.col(col++) = two_form_from_pair(dz_.row(a).conjugate(), dz_.row(b).conjugate());
  lu_.compute(to_real_);
}

ComplexStructure ComplexStructure::standard(Convention c) {
  ComplexStructure cs;
  cs.build(c);
  return cs;
}

ComplexStructure ComplexStructure::with_kahler_form(Convention c, const KForm& omega) {
  if (omega.grade != 2) throw std::invalid_argument("with_kahler_form: omega must have grade 2");
  ComplexStructure cs;
  cs.build(c);
  cs.kahler_form_ = omega;
  return cs;
}

ComplexStructure::PQCoefficients ComplexStructure::pq_coefficients(const KForm& alpha) const {
  if (alpha.grade != 2) throw std::invalid_argument("pq_coefficients: input must have grade 2");
  const Eigen::Matrix<Complex, 28, 1> sol = lu_.solve(alpha.coeffs.cast<Complex>());
  PQCoefficients out;
  out.part20 = sol.segment<6>(0);
  out.part11 = sol.segment<16>(6);
  out.part02 = sol.segment<6>(22);
  return out;
}

KForm ComplexStructure::real_form_from_02(const Vector6c& c02) const {
  Eigen::Matrix<Complex, 28, 1> v = Eigen::Matrix<Complex, 28, 1>::Zero();
  v.segment<6>(22) = c02;
  v.segment<6>(0) = c02.conjugate();
  const Eigen::Matrix<Complex, 28, 1> real_coeffs = to_real_ * v;
  KForm f = KForm::zero(2);
  f.coeffs = real_coeffs.real();
  return f;
}

KForm ComplexStructure::form_from_11(const Vector16c& c11) const {
  Eigen::Matrix<Complex, 28, 1> v = Eigen::Matrix<Complex, 28, 1>::Zero();
  v.segment<16>(6) = c11;
  const Eigen::Matrix<Complex, 28, 1> real_coeffs = to_real_ * v;
  if (real_coeffs.imag().lpNorm<Eigen::Infinity>() > 1e-9)
    throw std::invalid_argument("form_from_11: coefficients are not conjugation-symmetric");
  KForm f = KForm::zero(2);
  f.coeffs = real_coeffs.real();
  return f;
}

Complex ComplexStructure::omega_trace(const KForm& alpha) const {
  return inner(alpha, kahler_form_) / inner(kahler_form_, kahler_form_);
}

PQDecomposition decompose_pq(const ComplexStructure& cs, const KForm& alpha) {
  const auto c = cs.pq_coefficients(alpha);
  PQDecomposition d;
  d.part20 = c.part20;
  d.part11 = c.part11;
  d.part02 = c.part02;
  d.trace_coeff = cs.omega_trace(alpha).real();
  d.trace_part = d.trace_coeff * cs.kahler_form();
  d.traceless11 = cs.form_from_11(c.part11) - d.trace_part;
  d.offdiagonal = alpha - d.trace_part - d.traceless11;
  return d;
}

Vector6c star_theta(const ComplexStructure& cs, const Vector6c& phi) {
  (void)cs;  // the table is convention-independent in the dzbar basis
  Vector6c out;
  for (int r = 0; r < 6; ++r) {
    const auto [comp, sign] = kStarTable[static_cast<std::size_t>(r)];
    out[r] = static_cast<double>(sign) * std::conj(phi[comp]);
  }
  return out;
}

namespace {

// orthonormal basis of the column span (rank cut at 1e-9)
Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > 1e-9) ++rank;
  return svd.matrixU().leftCols(rank);
}

// sin of the largest principal angle of span(a) measured inside span(b);
// both arguments orthonormal
double max_angle_sin(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::MatrixXd resid = a - b * (b.transpose() * a);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(resid);
  return svd.singularValues().maxCoeff();
}

}  // namespace

SplitMatchReport verify_split_match(const ComplexStructure& cs) {
  SplitMatchReport rep;

  // real spans of the +/- eigenspaces of star_theta
  std::vector<Eigen::VectorXd> plus, minus;
  for (int r = 0; r < 6; ++r) {
    for (int im = 0; im < 2; ++im) {
      Vector6c e = Vector6c::Zero();
      e[r] = im ? Complex(0, 1) : Complex(1, 0);
      const Vector6c se = star_theta(cs, e);
      plus.push_back(cs.real_form_from_02(e + se).coeffs);
      minus.push_back(cs.real_form_from_02(e - se).coeffs);
    }
  }
  const auto stack = [](const std::vector<Eigen::VectorXd>& vs) {
    Eigen::MatrixXd m(28, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vs[i];
    return m;
  };
  const Eigen::MatrixXd bplus = orthonormal_span(stack(plus));
  const Eigen::MatrixXd bminus = orthonormal_span(stack(minus));
  rep.dim_plus = static_cast<int>(bplus.cols());
  rep.dim_minus = static_cast<int>(bminus.cols());

  // real (1,1) forms, omega removed; real <=> the coefficient matrix of
  // dz_a ^ dzbar_b is anti-Hermitian
  std::vector<Eigen::VectorXd> oneone;
  for (int a = 0; a < 4; ++a) {
    Vector16c e = Vector16c::Zero();
    e[4 * a + a] = Complex(0, 1);
    oneone.push_back(cs.form_from_11(e).coeffs);
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      Vector16c e = Vector16c::Zero();
      e[4 * a + b] = Complex(1, 0);
      e[4 * b + a] = Complex(-1, 0);
      oneone.push_back(cs.form_from_11(e).coeffs);
      e.setZero();
      e[4 * a + b] = Complex(0, 1);
      e[4 * b + a] = Complex(0, 1);
      oneone.push_back(cs.form_from_11(e).coeffs);
    }
  }
  Eigen::VectorXd omn = cs.kahler_form().coeffs.normalized();
  Eigen::MatrixXd m11 = stack(oneone);
  m11 -= omn * (omn.transpose() * m11);
  const Eigen::MatrixXd b11t = orthonormal_span(m11);
  rep.dim_traceless11 = static_cast<int>(b11t.cols());

  // eigenspace ranges from the spectral split of the Cayley operator
  const ProjectorPair& pp = cayley_projectors();
  const Eigen::MatrixXd r7 = orthonormal_span(pp.p7);
  const Eigen::MatrixXd r21 = orthonormal_span(pp.p21);

  Eigen::MatrixXd side7(28, 1 + bplus.cols());
  side7.col(0) = omn;
  side7.rightCols(bplus.cols()) = bplus;
  const Eigen::MatrixXd side7o = orthonormal_span(side7);

  Eigen::MatrixXd side21(28, b11t.cols() + bminus.cols());
  side21.leftCols(b11t.cols()) = b11t;
  side21.rightCols(bminus.cols()) = bminus;
  const Eigen::MatrixXd side21o = orthonormal_span(side21);

  rep.max_angle_7 = max_angle_sin(side7o, r7);
  rep.max_angle_21 = max_angle_sin(side21o, r21);
  rep.match = side7o.cols() == 7 && side21o.cols() == 21 && rep.max_angle_7 < 1e-9 &&
              rep.max_angle_21 < 1e-9 && rep.dim_plus == 6 && rep.dim_minus == 6 &&
              rep.dim_traceless11 == 15;
  return rep;
}

}  // namespace spin7
