#include "spin7/two_form_split.hpp"

#include <stdexcept>
#include <vector>

namespace spin7 {

TwoFormOperator::TwoFormOperator(Eigen::MatrixXd m) : matrix(std::move(m)) {
  if (matrix.rows() != 28 || matrix.cols() != 28)
    throw std::invalid_argument("TwoFormOperator: matrix must be 28x28");
  if ((matrix - matrix.transpose()).lpNorm<Eigen::Infinity>() > 1e-12)
    throw std::invalid_argument("TwoFormOperator: matrix must be symmetric");
}

KForm TwoFormOperator::apply(const KForm& alpha) const {
  if (alpha.grade != 2) throw std::invalid_argument("TwoFormOperator: input must have grade 2");
  return KForm(2, matrix * alpha.coeffs);
}

KForm ProjectorPair::project7(const KForm& alpha) const {
  if (alpha.grade != 2) throw std::invalid_argument("ProjectorPair: input must have grade 2");
  return KForm(2, p7 * alpha.coeffs);
}

KForm ProjectorPair::project21(const KForm& alpha) const {
  if (alpha.grade != 2) throw std::invalid_argument("ProjectorPair: input must have grade 2");
  return KForm(2, p21 * alpha.coeffs);
}

TwoFormOperator lambda_operator(const KForm& omega4) {
  if (omega4.grade != 4) throw std::invalid_argument("lambda_operator: input must have grade 4");
  Eigen::MatrixXd m(28, 28);
  for (int j = 0; j < 28; ++j) {
    KForm e = KForm::zero(2);
    e.coeffs[j] = 1.0;
    m.col(j) = hodge_star(wedge(omega4, e)).coeffs;
  }
  return TwoFormOperator(std::move(m));
}

ProjectorPair eigensplit(const TwoFormOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.matrix);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensplit: eigensolver failed");
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending

  constexpr double kClusterTol = 1e-9;
  std::vector<int> cluster_end;  // exclusive ends
  for (int i = 1; i < 28; ++i)
    if (ev[i] - ev[i - 1] > kClusterTol) cluster_end.push_back(i);
  cluster_end.push_back(28);
  if (cluster_end.size() != 2)
    throw std::invalid_argument("eigensplit: input is not a Spin(7) 4-form");

  const auto projector = [&es](int lo, int hi) {
    const auto block = es.eigenvectors().middleCols(lo, hi - lo);
    return Eigen::MatrixXd(block * block.transpose());
  };
  ProjectorPair pair;
  pair.p21 = projector(0, cluster_end[0]);          // smaller eigenvalue cluster
  pair.p7 = projector(cluster_end[0], cluster_end[1]);  // larger eigenvalue cluster
  return pair;
}

KForm project7_formula(const KForm& alpha) {
  if (alpha.grade != 2) throw std::invalid_argument("project7_formula: input must have grade 2");
  return 0.25 * (hodge_star(wedge(cayley_form(), alpha)) + alpha);
}

const ProjectorPair& cayley_projectors() {
  static const ProjectorPair pair = eigensplit(lambda_operator(cayley_form()));
  return pair;
}

}  // namespace spin7
