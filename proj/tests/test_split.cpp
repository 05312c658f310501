#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spin7/gamma8.hpp"
#include "spin7/kform.hpp"
#include "spin7/two_form_split.hpp"

using namespace spin7;

namespace {

KForm random_two_form(std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  KForm f = KForm::zero(2);
  for (int i = 0; i < 28; ++i) f.coeffs[i] = dist(rng);
  return f;
}

const KForm& omega_kahler() {
  static const KForm om = KForm::basis({1, 2}) + KForm::basis({3, 4}) + KForm::basis({5, 6}) +
                          KForm::basis({7, 8});
  return om;
}

}  // namespace

TEST_CASE("lambda operator eigenstructure") {
  const TwoFormOperator op = lambda_operator(cayley_form());
  CHECK((op.matrix - op.matrix.transpose()).lpNorm<Eigen::Infinity>() <= 1e-15);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.matrix);
  int mult_m1 = 0, mult_3 = 0;
  for (int i = 0; i < 28; ++i) {
    if (std::fabs(es.eigenvalues()[i] + 1.0) < 1e-9) ++mult_m1;
    if (std::fabs(es.eigenvalues()[i] - 3.0) < 1e-9) ++mult_3;
  }
  CHECK(mult_m1 == 21);
  CHECK(mult_3 == 7);

  CHECK(approx_equal(op.apply(omega_kahler()), 3.0 * omega_kahler(), 1e-12));
  CHECK(approx_equal(lambda_operator(KForm::zero(4)).apply(omega_kahler()), KForm::zero(2)));
  CHECK_THROWS_AS(lambda_operator(KForm::zero(2)), std::invalid_argument);
}

TEST_CASE("eigensplit projectors") {
  const ProjectorPair& pp = cayley_projectors();
  CHECK((pp.p7 * pp.p7 - pp.p7).lpNorm<Eigen::Infinity>() <= 1e-12);
  CHECK((pp.p21 * pp.p21 - pp.p21).lpNorm<Eigen::Infinity>() <= 1e-12);
  CHECK((pp.p7 + pp.p21 - Eigen::MatrixXd::Identity(28, 28)).lpNorm<Eigen::Infinity>() <= 1e-12);
  CHECK((pp.p7 * pp.p21).lpNorm<Eigen::Infinity>() <= 1e-12);
  CHECK(pp.p7.trace() == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(pp.p21.trace() == doctest::Approx(21.0).epsilon(1e-12));

  const Eigen::MatrixXd T = lambda_operator(cayley_form()).matrix;
  CHECK((T * pp.p7 - 3.0 * pp.p7).lpNorm<Eigen::Infinity>() <= 1e-12);
  CHECK((T * pp.p21 + pp.p21).lpNorm<Eigen::Infinity>() <= 1e-12);

  CHECK(approx_equal(pp.project7(omega_kahler()), omega_kahler(), 1e-12));
  CHECK(approx_equal(pp.project21(omega_kahler()), KForm::zero(2), 1e-12));

  // one eigenvalue cluster only: not a Spin(7) form
  CHECK_THROWS_WITH_AS(eigensplit(TwoFormOperator(Eigen::MatrixXd::Identity(28, 28))),
                       "eigensplit: input is not a Spin(7) 4-form", std::invalid_argument);
}

TEST_CASE("projection formula agrees with the spectral projector") {
  const ProjectorPair& pp = cayley_projectors();
  CHECK(approx_equal(project7_formula(omega_kahler()), omega_kahler(), 1e-12));
  CHECK(approx_equal(project7_formula(KForm::basis({1, 2}) - KForm::basis({3, 4})),
                     KForm::zero(2), 1e-12));
  CHECK(approx_equal(project7_formula(KForm::zero(2)), KForm::zero(2)));
  CHECK_THROWS_AS(project7_formula(KForm::zero(3)), std::invalid_argument);

  std::mt19937_64 rng(21u);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const KForm a = random_two_form(rng);
    worst = std::max(worst,
                     (project7_formula(a) - pp.project7(a)).coeffs.lpNorm<Eigen::Infinity>());
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("gamma8: order, non-commutativity, membership, closure") {
  for (Convention conv : {Convention::I, Convention::II}) {
    CAPTURE(to_string(conv));
    const auto els = gamma8_elements(conv);
    CHECK(els.size() == 8);

    const auto a = gamma8_generator_alpha(conv).matrix;
    const auto b = gamma8_generator_beta(conv).matrix;
    CHECK((a * b - b * a).lpNorm<Eigen::Infinity>() > 1e-9);
    CHECK((a * a * a * a - Eigen::Matrix<double, 8, 8>::Identity()).lpNorm<Eigen::Infinity>() <=
          1e-15);

    for (const auto& g : els) {
      CAPTURE(g.name);
      CHECK(verify_spin7_membership(g));
    }

    // closed under multiplication
    for (const auto& g : els) {
      for (const auto& h : els) {
        const Eigen::Matrix<double, 8, 8> prod = g.map.matrix * h.map.matrix;
        bool found = false;
        for (const auto& e : els)
          found = found || (e.map.matrix - prod).lpNorm<Eigen::Infinity>() < 1e-12;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("membership rejects non-orthogonal and non-preserving maps") {
  GroupElement stretch{"stretch", LinearMap8{}};
  stretch.map.matrix(0, 0) = 2.0;
  CHECK_FALSE(verify_spin7_membership(stretch));

  // orthogonal but not in Spin(7): swap of two axes flips Omega0 terms
  GroupElement swap01{"swap", LinearMap8{}};
  swap01.map.matrix.setIdentity();
  swap01.map.matrix(0, 0) = 0.0;
  swap01.map.matrix(1, 1) = 0.0;
  swap01.map.matrix(0, 1) = 1.0;
  swap01.map.matrix(1, 0) = 1.0;
  CHECK(swap01.map.is_orthogonal());
  CHECK_FALSE(verify_spin7_membership(swap01));

  GroupElement identity{"e", LinearMap8{}};
  CHECK(verify_spin7_membership(identity));
}

TEST_CASE("projection is equivariant under gamma8") {
  std::mt19937_64 rng(22u);
  for (Convention conv : {Convention::I, Convention::II}) {
    for (const auto& g : gamma8_elements(conv)) {
      const KForm a = random_two_form(rng);
      const KForm lhs = project7_formula(pullback(g.map, a));
      const KForm rhs = pullback(g.map, project7_formula(a));
      CHECK(approx_equal(lhs, rhs, 1e-12));
    }
  }
}
