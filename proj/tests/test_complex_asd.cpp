#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spin7/complex_structure.hpp"
#include "spin7/curvature_sample.hpp"
#include "spin7/two_form_split.hpp"

using namespace spin7;

namespace {

CurvatureSample random_sample(std::mt19937_64& rng, int rank = 2) {
  std::normal_distribution<double> dist;
  CurvatureSample f = CurvatureSample::zero(rank);
  for (auto& m : f.components) {
    Eigen::MatrixXcd raw(rank, rank);
    for (int i = 0; i < rank; ++i) {
      raw(i, i) = Complex(0, dist(rng));
      for (int j = i + 1; j < rank; ++j) {
        raw(i, j) = Complex(dist(rng), dist(rng));
        raw(j, i) = -std::conj(raw(i, j));
      }
    }
    m = raw;
  }
  return f;
}

CurvatureSample project_components(const CurvatureSample& f, const Eigen::MatrixXd& proj) {
  std::vector<Eigen::MatrixXcd> out(28, Eigen::MatrixXcd::Zero(f.rank, f.rank));
  for (int row = 0; row < 28; ++row)
    for (int col = 0; col < 28; ++col)
      out[static_cast<std::size_t>(row)] += proj(row, col) * f.components[static_cast<std::size_t>(col)];
  return CurvatureSample(f.rank, std::move(out));
}

Vector6c random_02(std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Vector6c v;
  for (int i = 0; i < 6; ++i) v[i] = Complex(dist(rng), dist(rng));
  return v;
}

}  // namespace

TEST_CASE("structure identities in both conventions") {
  for (Convention conv : {Convention::I, Convention::II}) {
    CAPTURE(to_string(conv));
    const ComplexStructure cs = ComplexStructure::standard(conv);

    const auto& J = cs.j_matrix();
    CHECK((J * J + Eigen::Matrix<double, 8, 8>::Identity()).lpNorm<Eigen::Infinity>() <= 1e-15);
    CHECK(LinearMap8{J}.is_orthogonal());

    // 1/2 omega^2 + Re theta = Omega0, coefficientwise
    const KForm rebuilt = 0.5 * wedge(cs.kahler_form(), cs.kahler_form()) + cs.theta_re();
    CHECK(approx_equal(rebuilt, cayley_form(), 1e-12));

    // theta ^ conj(theta) = (16/4!) omega^4 = 16 vol
    const KForm tt = wedge(cs.theta_re(), cs.theta_re()) + wedge(cs.theta_im(), cs.theta_im());
    const KForm om2 = wedge(cs.kahler_form(), cs.kahler_form());
    const KForm om4 = wedge(om2, om2);
    CHECK(approx_equal(tt, (16.0 / 24.0) * om4, 1e-12));
    CHECK(approx_equal(tt, 16.0 * vol8(), 1e-12));

    // J-pullback fixes omega and multiplies theta by i^4 = 1
    CHECK(approx_equal(pullback(LinearMap8{J}, cs.kahler_form()), cs.kahler_form(), 1e-12));
    CHECK(approx_equal(pullback(LinearMap8{J}, cs.theta_re()), cs.theta_re(), 1e-12));
  }
}

TEST_CASE("pq decomposition") {
  const ComplexStructure cs = ComplexStructure::standard(Convention::I);

  SUBCASE("omega is pure trace") {
    const PQDecomposition d = decompose_pq(cs, cs.kahler_form());
    CHECK(d.trace_coeff == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(d.part20.norm() <= 1e-13);
    CHECK(d.part02.norm() <= 1e-13);
    CHECK(d.traceless11.coeffs.norm() <= 1e-13);
    CHECK(d.offdiagonal.coeffs.norm() <= 1e-13);
  }

  SUBCASE("tau12 - tau34 is traceless (1,1)") {
    const KForm a = KForm::basis({1, 2}) - KForm::basis({3, 4});
    const PQDecomposition d = decompose_pq(cs, a);
    CHECK(std::fabs(d.trace_coeff) <= 1e-13);
    CHECK(d.part20.norm() <= 1e-13);
    CHECK(d.part02.norm() <= 1e-13);
    CHECK(approx_equal(d.traceless11, a, 1e-12));
    // J-invariance of a (1,1) form
    CHECK(approx_equal(pullback(LinearMap8{cs.j_matrix()}, a), a, 1e-12));
  }

  SUBCASE("Re(dz1^dz2) splits into (2,0) + (0,2) only") {
    // dz1 ^ dz2 = (dx1 + i dx2) ^ (dx3 + i dx4); real part tau13 - tau24
    const KForm a = KForm::basis({1, 3}) - KForm::basis({2, 4});
    const PQDecomposition d = decompose_pq(cs, a);
    CHECK(std::fabs(d.trace_coeff) <= 1e-13);
    CHECK(d.traceless11.coeffs.norm() <= 1e-12);
    CHECK(d.part20.norm() > 0.1);
    CHECK(d.part02.norm() > 0.1);
    CHECK(approx_equal(d.offdiagonal, a, 1e-12));
  }

  SUBCASE("parts sum to the input and are orthogonal") {
    std::mt19937_64 rng(31u);
    std::normal_distribution<double> dist;
    for (int trial = 0; trial < 50; ++trial) {
      KForm a = KForm::zero(2);
      for (int i = 0; i < 28; ++i) a.coeffs[i] = dist(rng);
      const PQDecomposition d = decompose_pq(cs, a);
      CHECK(approx_equal(d.reconstruct(), a, 1e-12));
      CHECK(std::fabs(inner(d.trace_part, d.traceless11)) <= 1e-10);
      CHECK(std::fabs(inner(d.trace_part, d.offdiagonal)) <= 1e-10);
      CHECK(std::fabs(inner(d.traceless11, d.offdiagonal)) <= 1e-10);
      // conjugation swaps (2,0) and (0,2) for real inputs
      CHECK((d.part20.conjugate() - d.part02).norm() <= 1e-12);
    }
  }
}

TEST_CASE("star_theta is an anti-linear involution with 6+6 split") {
  const ComplexStructure cs = ComplexStructure::standard(Convention::I);
  std::mt19937_64 rng(32u);

  for (int trial = 0; trial < 50; ++trial) {
    const Vector6c phi = random_02(rng);
    CHECK((star_theta(cs, star_theta(cs, phi)) - phi).norm() <= 1e-13);

    std::normal_distribution<double> dist;
    const Complex c(dist(rng), dist(rng));
    const Vector6c lhs = star_theta(cs, c * phi);
    const Vector6c rhs = std::conj(c) * star_theta(cs, phi);
    CHECK((lhs - rhs).norm() <= 1e-12);
  }
  CHECK(star_theta(cs, Vector6c::Zero()).norm() == 0.0);

  // +1 / -1 eigenspaces have real dimension 6 each (rank computation)
  Eigen::MatrixXd star_real(12, 12);
  for (int col = 0; col < 12; ++col) {
    Vector6c e = Vector6c::Zero();
    if (col < 6)
      e[col] = Complex(1, 0);
    else
      e[col - 6] = Complex(0, 1);
    const Vector6c se = star_theta(cs, e);
    for (int row = 0; row < 6; ++row) {
      star_real(row, col) = se[row].real();
      star_real(row + 6, col) = se[row].imag();
    }
  }
  CHECK((star_real * star_real - Eigen::MatrixXd::Identity(12, 12)).lpNorm<Eigen::Infinity>() <=
        1e-13);
  Eigen::FullPivLU<Eigen::MatrixXd> plus(star_real - Eigen::MatrixXd::Identity(12, 12));
  Eigen::FullPivLU<Eigen::MatrixXd> minus(star_real + Eigen::MatrixXd::Identity(12, 12));
  CHECK(12 - plus.rank() == 6);
  CHECK(12 - minus.rank() == 6);
}

namespace {

// Levi-Civita sign of four indices from {0..3}; 0 on repeats
int levi_civita4(int i, int j, int k, int l) {
  int perm[4] = {i, j, k, l};
  int sign = 1;
  for (int s = 0; s < 4; ++s)
    for (int t = s + 1; t < 4; ++t) {
      if (perm[s] == perm[t]) return 0;
      if (perm[s] > perm[t]) sign = -sign;
    }
  return sign;
}

// coefficient of dzbar1^dzbar2^dzbar3^dzbar4 in phi ^ chi for (0,2) coefficients
Complex wedge_coefficient_02(const Vector6c& phi, const Vector6c& chi) {
  static const int pair_axes[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Complex out(0, 0);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      out += static_cast<double>(levi_civita4(pair_axes[p][0], pair_axes[p][1], pair_axes[q][0],
                                              pair_axes[q][1])) *
             phi[p] * chi[q];
  return out;
}

}  // namespace

TEST_CASE("star_theta defining relation phi ^ star(psi) = <phi, psi> conj(theta)") {
  const ComplexStructure cs = ComplexStructure::standard(Convention::I);
  std::mt19937_64 rng(33u);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector6c phi = random_02(rng), psi = random_02(rng);
    const Complex lhs = wedge_coefficient_02(phi, star_theta(cs, psi));
    const Complex rhs = (phi.array() * psi.array().conjugate()).sum();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("split match report") {
  for (Convention conv : {Convention::I, Convention::II}) {
    CAPTURE(to_string(conv));
    const SplitMatchReport rep = verify_split_match(ComplexStructure::standard(conv));
    CHECK(rep.match);
    CHECK(rep.dim_traceless11 == 15);
    CHECK(rep.dim_minus == 6);
    CHECK(rep.dim_omega == 1);
    CHECK(rep.dim_plus == 6);
    CHECK(rep.max_angle_7 < 1e-9);
    CHECK(rep.max_angle_21 < 1e-9);
  }

  // negative control: a non-compatible "Kahler form" breaks the match
  const KForm perturbed = KForm::basis({1, 2}) + KForm::basis({3, 4}) + KForm::basis({5, 6}) +
                          KForm::basis({7, 8}) + 0.1 * KForm::basis({1, 3});
  const SplitMatchReport bad =
      verify_split_match(ComplexStructure::with_kahler_form(Convention::I, perturbed));
  CHECK_FALSE(bad.match);
}

TEST_CASE("hermitian-einstein curvature passes the instanton check") {
  const ComplexStructure cs = ComplexStructure::standard(Convention::I);
  const Eigen::Matrix2cd isigma3 = (Eigen::Matrix2cd() << Complex(0, 1), 0, 0, Complex(0, -1)).finished();

  SUBCASE("traceless (1,1) sample: hypothesis holds, pi7 vanishes") {
    const KForm a = KForm::basis({1, 2}) - KForm::basis({3, 4});
    const HEReport rep = he_implies_instanton(cs, CurvatureSample::from_form(a, isigma3));
    CHECK(rep.hypothesis_holds);
    CHECK(rep.pi7_norm <= 1e-10);
    CHECK(rep.holds);
  }

  SUBCASE("omega-shaped sample: hypothesis fails and pi7 is nonzero") {
    const HEReport rep =
        he_implies_instanton(cs, CurvatureSample::from_form(cs.kahler_form(), isigma3));
    CHECK_FALSE(rep.hypothesis_holds);
    CHECK(rep.trace_norm > 0.1);
    CHECK(rep.pi7_norm > 0.1);
    CHECK(rep.holds);  // vacuously
  }

  SUBCASE("zero sample") {
    const HEReport rep = he_implies_instanton(cs, CurvatureSample::zero(2));
    CHECK(rep.hypothesis_holds);
    CHECK(rep.holds);
  }
}

TEST_CASE("complex ASD residual pairs with pi7 vanishing") {
  const ComplexStructure cs = ComplexStructure::standard(Convention::I);
  const ProjectorPair& pp = cayley_projectors();
  std::mt19937_64 rng(34u);

  SUBCASE("zero sample") {
    const auto [r02, rtr] = complex_asd_residual(cs, CurvatureSample::zero(2));
    CHECK(r02 == 0.0);
    CHECK(rtr == 0.0);
  }

  SUBCASE("pure anti-invariant (0,2) component gives zero residual") {
    const Vector6c phi = random_02(rng);
    const Vector6c minus_part = phi - star_theta(cs, phi);
    const KForm a = cs.real_form_from_02(minus_part);
    const Eigen::Matrix2cd isigma1 = (Eigen::Matrix2cd() << 0, Complex(0, 1), Complex(0, 1), 0).finished();
    const auto [r02, rtr] = complex_asd_residual(cs, CurvatureSample::from_form(a, isigma1));
    CHECK(r02 <= 1e-12);
    CHECK(rtr <= 1e-12);
    CHECK(pi7_norm(CurvatureSample::from_form(a, isigma1)) <= 1e-10);
  }

  SUBCASE("equivalence on 1000 samples") {
    int agreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      CurvatureSample f = random_sample(rng);
      if (trial % 2 == 0) f = project_components(f, pp.p21);
      const auto [r02, rtr] = complex_asd_residual(cs, f);
      const bool residual_zero = r02 <= 1e-10 && rtr <= 1e-10;
      const bool p7_zero = pi7_norm(f) <= 1e-10;
      if (residual_zero == p7_zero) ++agreements;
    }
    CHECK(agreements == 1000);
  }
}

TEST_CASE("curvature sample json round trip") {
  std::mt19937_64 rng(35u);
  const CurvatureSample f = random_sample(rng, 3);
  const CurvatureSample g = curvature_sample_from_json(curvature_sample_to_json(f));
  CHECK(g.rank == 3);
  double worst = 0.0;
  for (int b = 0; b < 28; ++b)
    worst = std::max(worst, (f.components[static_cast<std::size_t>(b)] -
                             g.components[static_cast<std::size_t>(b)]).lpNorm<Eigen::Infinity>());
  CHECK(worst == 0.0);
  CHECK_THROWS_AS(curvature_sample_from_json(nlohmann::json{{"rank", 2}}), std::invalid_argument);
}
