#include "spin7/selfcheck.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "spin7/complex_structure.hpp"
#include "spin7/curvature_sample.hpp"
#include "spin7/gamma8.hpp"
#include "spin7/gluing.hpp"
#include "spin7/index_formulas.hpp"
#include "spin7/kform.hpp"
#include "spin7/lattice.hpp"
#include "spin7/two_form_split.hpp"

namespace spin7 {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

KForm random_two_form(std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  KForm f = KForm::zero(2);
  for (int i = 0; i < 28; ++i) f.coeffs[i] = dist(rng);
  return f;
}

CriterionResult eigenstructure() {
  Check c;
  const TwoFormOperator op = lambda_operator(cayley_form());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.matrix);
  int mult_m1 = 0, mult_3 = 0;
  for (int i = 0; i < 28; ++i) {
    if (std::fabs(es.eigenvalues()[i] + 1.0) < 1e-9) ++mult_m1;
    if (std::fabs(es.eigenvalues()[i] - 3.0) < 1e-9) ++mult_3;
  }
  c.require(mult_m1 == 21, "eigenvalue -1 multiplicity != 21");
  c.require(mult_3 == 7, "eigenvalue 3 multiplicity != 7");
  c.detail << "multiplicities " << mult_m1 << "/" << mult_3;
  return {1, "eigenstructure of *(Omega ^ .)", c.ok, 0.0, c.detail.str()};
}

CriterionResult projection_formula() {
  Check c;
  std::mt19937_64 rng(20240817u);
  const ProjectorPair& pp = cayley_projectors();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const KForm a = random_two_form(rng);
    const KForm diff = project7_formula(a) - pp.project7(a);
    worst = std::max(worst, diff.coeffs.lpNorm<Eigen::Infinity>());
  }
  c.require(worst <= 1e-12, "formula vs spectral projector exceeds 1e-12");
  c.detail << "max deviation " << worst;
  return {2, "projection formula vs spectral projector", c.ok, 0.0, c.detail.str()};
}

CriterionResult cayley_identities() {
  Check c;
  const KForm& omega = cayley_form();
  c.require(approx_equal(hodge_star(omega), omega, 1e-12), "*Omega != Omega");
  KForm expected = 14.0 * vol8();
  c.require(approx_equal(wedge(omega, omega), expected, 1e-12), "Omega^Omega != 14 vol");
  c.require(std::fabs(inner(omega, omega) - 14.0) <= 1e-12, "|Omega|^2 != 14");
  c.detail << "self-dual, Omega^Omega = 14 vol";
  return {3, "Cayley form identities", c.ok, 0.0, c.detail.str()};
}

CriterionResult group_checks() {
  Check c;
  for (Convention conv : {Convention::I, Convention::II}) {
    const auto els = gamma8_elements(conv);
    c.require(els.size() == 8, "group order != 8 in convention " + to_string(conv));
    bool nonabelian = false;
    const auto a = gamma8_generator_alpha(conv).matrix, b = gamma8_generator_beta(conv).matrix;
    nonabelian = ((a * b - b * a).lpNorm<Eigen::Infinity>() > 1e-9);
    c.require(nonabelian, "generators commute in convention " + to_string(conv));
    for (const auto& g : els)
      c.require(verify_spin7_membership(g),
                "element " + g.name + " fails membership in convention " + to_string(conv));
  }
  c.detail << "order 8, non-abelian, preserves (g0, Omega0) in both conventions";
  return {4, "Gamma8 group", c.ok, 0.0, c.detail.str()};
}

CriterionResult complex_asd_checks() {
  Check c;
  for (Convention conv : {Convention::I, Convention::II}) {
    const ComplexStructure cs = ComplexStructure::standard(conv);
    const SplitMatchReport rep = verify_split_match(cs);
    c.require(rep.match, "split match failed in convention " + to_string(conv));
    c.require(rep.dim_traceless11 == 15 && rep.dim_minus == 6, "21 != 15 + 6");
    c.require(rep.dim_omega == 1 && rep.dim_plus == 6, "7 != 1 + 6");
  }
  const ComplexStructure cs = ComplexStructure::standard(Convention::I);
  const ProjectorPair& pp = cayley_projectors();
  std::mt19937_64 rng(911u);
  std::normal_distribution<double> dist;
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    CurvatureSample f = CurvatureSample::zero(2);
    for (auto& m : f.components) {
      Eigen::MatrixXcd raw = Eigen::MatrixXcd::Zero(2, 2);
      raw(0, 0) = Complex(0, dist(rng));
      raw(1, 1) = Complex(0, dist(rng));
      raw(0, 1) = Complex(dist(rng), dist(rng));
      raw(1, 0) = -std::conj(raw(0, 1));
      m = raw;
    }
    if (trial % 2 == 0) {
      // project every algebra component onto the 21-part: pi7 vanishes
      std::vector<Eigen::MatrixXcd> projected(28, Eigen::MatrixXcd::Zero(2, 2));
      for (int row = 0; row < 28; ++row)
        for (int col = 0; col < 28; ++col)
          projected[static_cast<std::size_t>(row)] += pp.p21(row, col) * f.components[static_cast<std::size_t>(col)];
      f.components = projected;
    }
    const auto [r02, rtr] = complex_asd_residual(cs, f);
    const double p7n = pi7_norm(f);
    const bool residual_zero = r02 <= 1e-10 && rtr <= 1e-10;
    const bool p7_zero = p7n <= 1e-10;
    if (residual_zero != p7_zero) {
      c.require(false, "residual/pi7 equivalence failed");
      break;
    }
    ++checked;
  }
  c.detail << "dims (15,6|1,6) both conventions; equivalence on " << checked << " samples";
  return {5, "complex ASD split and residual equivalence", c.ok, 0.0, c.detail.str()};
}

CriterionResult index_arithmetic() {
  Check c;
  c.require(index_su2(0, 0) == -3, "index_su2(0,0) != -3");
  c.require(example_vdim(0, 0) == -3, "example_vdim(0,0) != -3");
  c.require(h1_delta(-1) == 1, "h1_delta(-1) != 1");
  c.require(h0_exceptional(-1) == 35, "h0_exceptional(-1) != 35");
  for (long long m = -10; m <= 0; ++m)
    c.require(h1_delta(m - 1) == h1_delta(m) + h0_exceptional(m), "h1 recursion failed");
  for (long long m = -10; m <= 10; ++m)
    c.require(h3_delta(m) == h1_delta(-m), "h3/h1 duality failed");
  c.detail << "recursion and duality hold on the stated ranges";
  return {6, "index arithmetic", c.ok, 0.0, c.detail.str()};
}

CriterionResult gluing_scalings() {
  Check c;
  const std::vector<double> grid = log_spaced(1e-5, 1e-2, 10);

  const auto l4err = [](double t) {
    return radial_norm(error_profile(GluingParams(t)), WeightedNormSpec(4, 0, scale_invariant_delta(4)));
  };
  const auto l8curv = [](double t) {
    return radial_norm(curvature_profile(GluingParams(t)), WeightedNormSpec(8, 0, scale_invariant_delta(8)));
  };
  const auto l8dchi = [](double t) {
    return radial_norm(dchi_profile(GluingParams(t)), WeightedNormSpec(8, 0, scale_invariant_delta(8)));
  };

  const ScalingFit f1 = scaling_fit(l4err, grid);
  c.require(std::fabs(f1.exponent - 1.0) <= 0.1, "l4 error exponent outside 1.0 +- 0.1");
  const ScalingFit f2 = scaling_fit(l8curv, grid);
  c.require(std::fabs(f2.exponent + 1.0) <= 0.1, "l8 curvature exponent outside -1.0 +- 0.1");
  const ScalingFit f3 = scaling_fit(approx_error_bound, grid);
  c.require(f3.exponent >= 1.0 / 3.0 - 0.05, "error bound exponent below 1/3 - 0.05");

  std::vector<double> logt, dchi;
  for (double t : grid) {
    logt.push_back(std::fabs(std::log(t)));
    dchi.push_back(l8dchi(t));
  }
  const ScalingFit f4 = fit_loglog(logt, dchi);
  c.require(std::fabs(f4.exponent + 7.0 / 8.0) <= 0.05, "dchi slope outside -7/8 +- 0.05");

  c.detail << "exponents " << f1.exponent << ", " << f2.exponent << ", " << f3.exponent << ", "
           << f4.exponent;
  return {7, "gluing scaling exponents", c.ok, 0.0, c.detail.str()};
}

CriterionResult lattice_u1() {
  Check c;
  const lattice::LatticeSpec spec(2, 1.0, lattice::Group::u1);
  const lattice::FourierOracleU1 oracle(spec);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const lattice::GaugeField a0 = lattice::random_field(spec, seed, 1e-2);
    const auto [a, rep] = lattice::gradient_descent(spec, a0, 20000, 1e-8);
    c.require(rep.converged && rep.final_residual < 1e-8,
              "seed " + std::to_string(seed) + " did not reach residual 1e-8");
    const double member = oracle.membership_residual(a);
    c.require(member < 1e-8, "seed " + std::to_string(seed) + " limit leaves the oracle space");
  }
  c.detail << "5 seeded starts converge into the Fourier-oracle solution space";
  return {8, "lattice solver, U(1)", c.ok, 0.0, c.detail.str()};
}

CriterionResult lattice_su2() {
  Check c;
  const lattice::LatticeSpec spec(2, 1.0, lattice::Group::su2);

  // gradient versus central finite differences of the energy
  std::mt19937_64 rng(77u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const lattice::GaugeField base = lattice::random_field(spec, 4242u, 0.05);
  const lattice::GaugeField grad = lattice::gradient(spec, base);
  constexpr double kStep = 1e-5;
  double worst = 0.0;
  for (int probe = 0; probe < 20; ++probe) {
    lattice::GaugeField dir;
    dir.a.resize(spec.field_size());
    for (Eigen::Index i = 0; i < dir.a.size(); ++i) dir.a[i] = dist(rng);
    dir.a.normalize();
    lattice::GaugeField plus{base.a + kStep * dir.a}, minus{base.a - kStep * dir.a};
    const double fd = (lattice::energy(spec, plus) - lattice::energy(spec, minus)) / (2.0 * kStep);
    const double an = grad.a.dot(dir.a);
    worst = std::max(worst, std::fabs(fd - an) / std::max(1.0, std::fabs(an)));
  }
  c.require(worst < 1e-6, "gradient/finite-difference relative error above 1e-6");

  // monotone descent from an amplitude-0.05 start
  const lattice::GaugeField a0 = lattice::random_field(spec, 99u, 0.05);
  const auto [a, rep] = lattice::gradient_descent(spec, a0, 20000, 1e-6);
  c.require(rep.converged, "descent did not converge");
  bool monotone = true;
  for (std::size_t i = 1; i < rep.energy_history.size(); ++i)
    monotone = monotone && rep.energy_history[i] <= rep.energy_history[i - 1] + 1e-15;
  c.require(monotone, "energy history is not monotone");

  // Picard tail contraction on a converging run
  const lattice::GaugeField p0 = lattice::random_field(spec, 7u, 0.05);
  const auto [ap, prep] = lattice::picard_iterate(spec, p0, 30, 1e-10);
  c.require(prep.converged, "Picard iteration did not converge");
  bool tail_ok = !prep.ratio_history.empty();
  for (std::size_t i = prep.ratio_history.size() >= 3 ? prep.ratio_history.size() - 3 : 0;
       i < prep.ratio_history.size(); ++i)
    tail_ok = tail_ok && prep.ratio_history[i] <= 0.6;
  c.require(tail_ok, "Picard tail contraction ratio above 0.6");

  c.detail << "gradient check " << worst << "; descent " << rep.iterations << " steps; Picard "
           << prep.iterations << " steps";
  return {9, "lattice solver, SU(2)", c.ok, 0.0, c.detail.str()};
}

CriterionResult timed(CriterionResult (*fn)()) {
  const auto start = Clock::now();
  CriterionResult r = fn();
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_selfcheck() {
  std::vector<CriterionResult> out;
  out.push_back(timed(eigenstructure));
  out.push_back(timed(projection_formula));
  out.push_back(timed(cayley_identities));
  out.push_back(timed(group_checks));
  out.push_back(timed(complex_asd_checks));
  out.push_back(timed(index_arithmetic));
  out.push_back(timed(gluing_scalings));
  out.push_back(timed(lattice_u1));
  out.push_back(timed(lattice_su2));
  return out;
}

nlohmann::json selfcheck_to_json(const std::vector<CriterionResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results)
    checks.push_back({{"id", r.id},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"seconds", r.seconds},
                      {"detail", r.detail}});
  return nlohmann::json{{"checks", checks}, {"all_pass", all_pass(results)}};
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace spin7
