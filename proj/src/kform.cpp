#include "spin7/kform.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spin7 {

MultiIndex::MultiIndex(std::vector<int> a) : axes(std::move(a)) {
  if (axes.size() > 8) throw std::invalid_argument("MultiIndex: more than 8 axes");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i] < 1 || axes[i] > 8) throw std::invalid_argument("MultiIndex: axes must lie in 1..8");
    if (i > 0 && axes[i] <= axes[i - 1])
      throw std::invalid_argument("MultiIndex: axes must be strictly increasing");
  }
}

MultiIndex MultiIndex::from_mask(std::uint32_t mask) {
  std::vector<int> axes;
  for (std::uint32_t rest = mask & 0xffu; rest != 0; rest &= rest - 1)
    axes.push_back(std::countr_zero(rest) + 1);
  return MultiIndex(std::move(axes));
}

std::uint32_t MultiIndex::mask() const {
  std::uint32_t m = 0;
  for (int ax : axes) m |= 1u << (ax - 1);
  return m;
}

KForm::KForm(int k, Eigen::VectorXd c) : grade(k), coeffs(std::move(c)) {
  if (k < 0 || k > 8) throw std::invalid_argument("KForm: grade must be in 0..8");
  if (coeffs.size() != kBinomial8[static_cast<std::size_t>(k)])
    throw std::invalid_argument("KForm: coefficient vector has wrong length for grade");
}

KForm KForm::zero(int k) {
  if (k < 0 || k > 8) throw std::invalid_argument("KForm: grade must be in 0..8");
  return KForm(k, Eigen::VectorXd::Zero(kBinomial8[static_cast<std::size_t>(k)]));
}

KForm KForm::basis(const MultiIndex& idx) {
  KForm f = zero(idx.grade());
  f.coeffs[idx.rank()] = 1.0;
  return f;
}

KForm KForm::basis(std::initializer_list<int> axes) {
  return basis(MultiIndex(std::vector<int>(axes)));
}

KForm& KForm::operator+=(const KForm& other) {
  if (grade != other.grade) throw std::invalid_argument("KForm: addition requires equal grades");
  coeffs += other.coeffs;
  return *this;
}

KForm& KForm::operator-=(const KForm& other) {
  if (grade != other.grade) throw std::invalid_argument("KForm: subtraction requires equal grades");
  coeffs -= other.coeffs;
  return *this;
}

KForm operator+(KForm a, const KForm& b) { return a += b; }
KForm operator-(KForm a, const KForm& b) { return a -= b; }
KForm operator*(double s, KForm a) { return a *= s; }
KForm operator*(KForm a, double s) { return a *= s; }
KForm operator-(KForm a) { a.coeffs = -a.coeffs; return a; }

bool approx_equal(const KForm& a, const KForm& b, double tol) {
  return a.grade == b.grade && (a.coeffs - b.coeffs).lpNorm<Eigen::Infinity>() <= tol;
}

bool LinearMap8::is_orthogonal(double tol) const {
  return (matrix * matrix.transpose() - Eigen::Matrix<double, 8, 8>::Identity())
             .lpNorm<Eigen::Infinity>() <= tol;
}

KForm wedge(const KForm& a, const KForm& b) {
  const int kc = a.grade + b.grade;
  if (kc > 8) throw std::invalid_argument("wedge: grade overflow (sum exceeds 8)");
  KForm out = KForm::zero(kc);
  const auto& ma = basis_masks(a.grade);
  const auto& mb = basis_masks(b.grade);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    const double ca = a.coeffs[static_cast<Eigen::Index>(i)];
    if (ca == 0.0) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      const double cb = b.coeffs[static_cast<Eigen::Index>(j)];
      if (cb == 0.0) continue;
      const int s = merge_sign(ma[i], mb[j]);
      if (s != 0) out.coeffs[mask_rank(ma[i] | mb[j])] += s * ca * cb;
    }
  }
  return out;
}

KForm hodge_star(const KForm& a) {
  KForm out = KForm::zero(8 - a.grade);
  const auto& masks = basis_masks(a.grade);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const double c = a.coeffs[static_cast<Eigen::Index>(i)];
    if (c == 0.0) continue;
    const std::uint32_t comp = complement_mask(masks[i]);
    out.coeffs[mask_rank(comp)] += merge_sign(masks[i], comp) * c;
  }
  return out;
}

double inner(const KForm& a, const KForm& b) {
  if (a.grade != b.grade) throw std::invalid_argument("inner: grade mismatch");
  return a.coeffs.dot(b.coeffs);
}

KForm pullback(const LinearMap8& m, const KForm& a) {
  if (std::fabs(m.matrix.determinant()) < 1e-12)
    throw std::invalid_argument("pullback: map is singular");
  const int k = a.grade;
  if (k == 0) return a;
  KForm out = KForm::zero(k);
  const auto& masks = basis_masks(k);
  std::vector<std::vector<int>> axes(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::uint32_t rest = masks[i]; rest != 0; rest &= rest - 1)
      axes[i].push_back(std::countr_zero(rest));
  }
  // pullback of dx^i is sum_j m_{ij} dx^j, so tau^A maps to
  // sum_B det(m[A,B]) tau^B
  Eigen::MatrixXd sub(k, k);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const double c = a.coeffs[static_cast<Eigen::Index>(i)];
    if (c == 0.0) continue;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) sub(r, s) = m.matrix(axes[i][r], axes[j][s]);
      out.coeffs[static_cast<Eigen::Index>(j)] += c * sub.determinant();
    }
  }
  return out;
}

const KForm& cayley_form() {
  static const KForm omega0 = [] {
    KForm f = KForm::zero(4);
    const auto add = [&f](std::initializer_list<int> axes, double c) {
      f.coeffs[MultiIndex(std::vector<int>(axes)).rank()] = c;
    };
    add({1, 2, 5, 6}, 1);
    add({1, 2, 7, 8}, 1);
    add({3, 4, 5, 6}, 1);
    add({3, 4, 7, 8}, 1);
    add({1, 3, 5, 7}, 1);
    add({1, 3, 6, 8}, -1);
    add({2, 4, 5, 7}, -1);
    add({2, 4, 6, 8}, 1);
    add({1, 4, 5, 8}, -1);
    add({1, 4, 6, 7}, -1);
    add({2, 3, 5, 8}, -1);
    add({2, 3, 6, 7}, -1);
    add({1, 2, 3, 4}, 1);
    add({5, 6, 7, 8}, 1);
    return f;
  }();
  return omega0;
}

const KForm& vol8() {
  static const KForm v = KForm::basis({1, 2, 3, 4, 5, 6, 7, 8});
  return v;
}

std::string to_string(const KForm& a) {
  std::ostringstream os;
  const auto& masks = basis_masks(a.grade);
  bool first = true;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const double c = a.coeffs[static_cast<Eigen::Index>(i)];
    if (c == 0.0) continue;
    if (!first) os << " + ";
    os << c << "*tau^{";
    for (int ax : MultiIndex::from_mask(masks[i]).axes) os << ax;
    os << "}";
    first = false;
  }
  if (first) os << "0 (grade " << a.grade << ")";
  return os.str();
}

}  // namespace spin7
