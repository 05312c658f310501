#pragma once

#include <Eigen/Dense>

#include "spin7/kform.hpp"

namespace spin7 {

// Self-adjoint operator on 2-form coefficient vectors.
struct TwoFormOperator {
  Eigen::MatrixXd matrix;  // 28 x 28, symmetric

  explicit TwoFormOperator(Eigen::MatrixXd m);
  KForm apply(const KForm& alpha) const;
};

// Orthogonal projectors onto the two eigenbundles of alpha -> *(Omega ^ alpha).
struct ProjectorPair {
  Eigen::MatrixXd p7;   // 28 x 28, rank 7 for a genuine Spin(7) form
  Eigen::MatrixXd p21;  // complementary projector

  KForm project7(const KForm& alpha) const;
  KForm project21(const KForm& alpha) const;
};

// matrix of v -> *(omega4 ^ v) on 2-forms
TwoFormOperator lambda_operator(const KForm& omega4);

// Spectral split of a symmetric operator whose spectrum clusters at exactly
// two values (tolerance 1e-9); p7 belongs to the larger eigenvalue.
ProjectorPair eigensplit(const TwoFormOperator& op);

// closed-form projection 1/4 (*(Omega0 ^ alpha) + alpha)
KForm project7_formula(const KForm& alpha);

// cached eigensplit(lambda_operator(cayley_form()))
const ProjectorPair& cayley_projectors();

}  // namespace spin7
