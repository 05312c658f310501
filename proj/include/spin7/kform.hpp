#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "spin7/combinatorics.hpp"

namespace spin7 {

// Increasing list of axes from {1..8}; the lexicographic rank of the list is
// the position of the corresponding coefficient in a KForm vector.
struct MultiIndex {
  std::vector<int> axes;

  explicit MultiIndex(std::vector<int> a);
  static MultiIndex from_mask(std::uint32_t mask);

  int grade() const { return static_cast<int>(axes.size()); }
  std::uint32_t mask() const;
  int rank() const { return mask_rank(mask()); }
};

// Degree-k alternating form on R^8, coefficients over the lexicographic
// basis tau^{i1...ik} = dx^{i1} ^ ... ^ dx^{ik}.
struct KForm {
  int grade = 0;
  Eigen::VectorXd coeffs;

  KForm() : coeffs(Eigen::VectorXd::Zero(1)) {}
  KForm(int k, Eigen::VectorXd c);

  static KForm zero(int k);
  static KForm basis(const MultiIndex& idx);
  static KForm basis(std::initializer_list<int> axes);

  double coeff(const MultiIndex& idx) const { return coeffs[idx.rank()]; }

  KForm& operator+=(const KForm& other);
  KForm& operator-=(const KForm& other);
  KForm& operator*=(double s) { coeffs *= s; return *this; }
};

KForm operator+(KForm a, const KForm& b);
KForm operator-(KForm a, const KForm& b);
KForm operator*(double s, KForm a);
KForm operator*(KForm a, double s);
KForm operator-(KForm a);

bool approx_equal(const KForm& a, const KForm& b, double tol = 1e-12);

// Invertible linear map on R^8 coordinates, x -> matrix * x.
struct LinearMap8 {
  Eigen::Matrix<double, 8, 8> matrix = Eigen::Matrix<double, 8, 8>::Identity();

  bool is_orthogonal(double tol = 1e-12) const;
};

KForm wedge(const KForm& a, const KForm& b);
KForm hodge_star(const KForm& a);
double inner(const KForm& a, const KForm& b);
KForm pullback(const LinearMap8& m, const KForm& a);

// the Cayley 4-form; self-dual, |Omega0|^2 = 14
const KForm& cayley_form();
// +tau^{12345678}, the fixed orientation
const KForm& vol8();

std::string to_string(const KForm& a);

}  // namespace spin7
