#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spin7/kform.hpp"
#include "spin7/kform_json.hpp"

using namespace spin7;

namespace {

KForm from_oracle(int grade, const oracle::FormMap& m) {
  KForm f = KForm::zero(grade);
  for (const auto& [idx, c] : m) f.coeffs[MultiIndex(idx).rank()] += c;
  return f;
}

KForm random_form(int grade, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  KForm f = KForm::zero(grade);
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) f.coeffs[i] = dist(rng);
  return f;
}

}  // namespace

TEST_CASE("multi-index ranking is a lexicographic bijection") {
  for (int k = 0; k <= 8; ++k) {
    const auto& masks = basis_masks(k);
    CHECK(static_cast<int>(masks.size()) == kBinomial8[static_cast<std::size_t>(k)]);
    std::vector<int> prev;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const MultiIndex mi = MultiIndex::from_mask(masks[i]);
      CHECK(mi.rank() == static_cast<int>(i));
      if (i > 0) CHECK(prev < mi.axes);  // strictly increasing lex order
      prev = mi.axes;
    }
  }
  CHECK_THROWS_AS(MultiIndex({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({0}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({9}), std::invalid_argument);
}

TEST_CASE("wedge basis cases") {
  const KForm dx1 = KForm::basis({1});
  const KForm dx2 = KForm::basis({2});
  CHECK(approx_equal(wedge(dx1, dx2), KForm::basis({1, 2})));
  CHECK(approx_equal(wedge(dx2, dx1), -KForm::basis({1, 2})));
  const KForm t12 = KForm::basis({1, 2});
  CHECK(approx_equal(wedge(t12, t12), KForm::zero(4)));
  CHECK_THROWS_AS(wedge(cayley_form(), KForm::basis({1, 2, 3, 4, 5})), std::invalid_argument);
}

TEST_CASE("cayley form: printed coefficients and norm") {
  const KForm& omega = cayley_form();
  CHECK(omega.coeff(MultiIndex({1, 2, 5, 6})) == 1.0);
  CHECK(omega.coeff(MultiIndex({2, 4, 6, 8})) == 1.0);
  CHECK(omega.coeff(MultiIndex({2, 3, 5, 8})) == -1.0);
  CHECK(omega.coeff(MultiIndex({1, 2, 3, 4})) == 1.0);
  CHECK(omega.coeff(MultiIndex({5, 6, 7, 8})) == 1.0);
  CHECK(inner(omega, omega) == doctest::Approx(14.0).epsilon(1e-14));
  int nonzero = 0;
  for (Eigen::Index i = 0; i < omega.coeffs.size(); ++i)
    if (omega.coeffs[i] != 0.0) ++nonzero;
  CHECK(nonzero == 14);
}

TEST_CASE("Omega ^ Omega = 14 vol, against the brute-force oracle") {
  const auto expanded = oracle::wedge(oracle::cayley_terms(), oracle::cayley_terms());
  CHECK(oracle::coefficient(expanded, {1, 2, 3, 4, 5, 6, 7, 8}) == doctest::Approx(14.0));
  CHECK(approx_equal(wedge(cayley_form(), cayley_form()), from_oracle(8, expanded), 1e-12));
  CHECK(approx_equal(wedge(cayley_form(), cayley_form()), 14.0 * vol8(), 1e-12));
}

TEST_CASE("hodge star basics and Cayley self-duality") {
  CHECK(approx_equal(hodge_star(KForm::basis(MultiIndex({}))), vol8()));
  CHECK(approx_equal(hodge_star(KForm::basis({1, 2})), KForm::basis({3, 4, 5, 6, 7, 8})));
  const auto starred = oracle::star(oracle::cayley_terms());
  CHECK(approx_equal(from_oracle(4, starred), cayley_form(), 1e-12));
  CHECK(approx_equal(hodge_star(cayley_form()), cayley_form(), 1e-12));
}

TEST_CASE("inner product on the tau basis") {
  CHECK(inner(KForm::basis({1, 2}), KForm::basis({1, 2})) == 1.0);
  CHECK(inner(KForm::basis({1, 2}), KForm::basis({3, 4})) == 0.0);
  CHECK_THROWS_AS(inner(KForm::basis({1}), KForm::basis({1, 2})), std::invalid_argument);
}

TEST_CASE("defining relation a ^ *b = <a,b> vol on random same-grade forms") {
  std::mt19937_64 rng(11u);
  for (int k = 0; k <= 8; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      const KForm a = random_form(k, rng);
      const KForm b = random_form(k, rng);
      const KForm lhs = wedge(a, hodge_star(b));
      CHECK(std::fabs(lhs.coeffs[0] - inner(a, b)) < 1e-12 * std::max(1.0, std::fabs(inner(a, b))));
    }
  }
}

TEST_CASE("star twice is (-1)^{k(8-k)} = (-1)^k") {
  std::mt19937_64 rng(12u);
  for (int k = 0; k <= 8; ++k) {
    const KForm a = random_form(k, rng);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    CHECK(approx_equal(hodge_star(hodge_star(a)), sign * a, 1e-12));
  }
}

TEST_CASE("wedge is bilinear, associative, graded-anticommutative") {
  std::mt19937_64 rng(13u);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> grade(0, 3);
    const int p = grade(rng), q = grade(rng), r = grade(rng);
    const KForm a = random_form(p, rng), b = random_form(q, rng), c = random_form(r, rng);
    if (p + q + r <= 8) {
      CHECK(approx_equal(wedge(wedge(a, b), c), wedge(a, wedge(b, c)), 1e-12));
    }
    if (p + q <= 8) {
      const double sign = (p * q) % 2 == 0 ? 1.0 : -1.0;
      CHECK(approx_equal(wedge(a, b), sign * wedge(b, a), 1e-12));
    }
  }
}

TEST_CASE("pullback: identity, reflections, functoriality, star compatibility") {
  LinearMap8 id;
  CHECK(approx_equal(pullback(id, cayley_form()), cayley_form()));

  LinearMap8 reflect;
  reflect.matrix(0, 0) = -1.0;
  CHECK(approx_equal(pullback(reflect, KForm::basis({1})), -KForm::basis({1})));

  LinearMap8 singular;
  singular.matrix.setZero();
  CHECK_THROWS_AS(pullback(singular, KForm::basis({1})), std::invalid_argument);

  std::mt19937_64 rng(14u);
  std::normal_distribution<double> dist;
  LinearMap8 m1, m2;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      m1.matrix(i, j) = dist(rng);
      m2.matrix(i, j) = dist(rng);
    }
  const KForm a = random_form(3, rng);
  LinearMap8 composed{m1.matrix * m2.matrix};
  CHECK(approx_equal(pullback(composed, a), pullback(m2, pullback(m1, a)), 1e-9));

  // against the expansion oracle
  oracle::FormMap am;
  const auto& masks = basis_masks(3);
  for (std::size_t i = 0; i < masks.size(); ++i)
    am[MultiIndex::from_mask(masks[i]).axes] = a.coeffs[static_cast<Eigen::Index>(i)];
  CHECK(approx_equal(pullback(m1, a), from_oracle(3, oracle::pullback(m1.matrix, am)), 1e-9));

  // orthogonal maps commute with the star up to the determinant sign
  Eigen::HouseholderQR<Eigen::Matrix<double, 8, 8>> qr(m1.matrix);
  LinearMap8 orth{qr.householderQ()};
  const double det = orth.matrix.determinant();  // +-1
  const KForm b = random_form(2, rng);
  CHECK(approx_equal(hodge_star(pullback(orth, b)), det * pullback(orth, hodge_star(b)), 1e-10));
}

TEST_CASE("json round trip and validation") {
  std::mt19937_64 rng(15u);
  for (int k : {0, 2, 4, 7}) {
    const KForm a = random_form(k, rng);
    CHECK(approx_equal(kform_from_json(kform_to_json(a)), a, 0.0));
  }
  CHECK_THROWS_AS(kform_from_json(nlohmann::json{{"grade", 2}, {"bogus", 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      kform_from_json(nlohmann::json{{"grade", 2}, {"terms", {{{"idx", {2, 1}}, {"c", 1.0}}}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      kform_from_json(nlohmann::json{{"grade", 3}, {"terms", {{{"idx", {1, 2}}, {"c", 1.0}}}}}),
      std::invalid_argument);
}
