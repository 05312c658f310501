#include <CLI11.hpp>
#include <bit>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "spin7/complex_structure.hpp"
#include "spin7/curvature_sample.hpp"
#include "spin7/gamma8.hpp"
#include "spin7/gluing.hpp"
#include "spin7/index_formulas.hpp"
#include "spin7/kform_json.hpp"
#include "spin7/lattice.hpp"
#include "spin7/selfcheck.hpp"
#include "spin7/two_form_split.hpp"

namespace {

using nlohmann::json;
using namespace spin7;

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void emit(const json& j, const std::optional<std::string>& output_path) {
  if (output_path) {
    std::ofstream out(*output_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + *output_path + "'");
    out << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << std::endl;
  }
}

int run_forms(const std::string& op, const std::string& a_path, const std::string& b_path,
              const std::string& map_path, const std::optional<std::string>& out_path) {
  json result;
  if (op == "cayley") {
    result = kform_to_json(cayley_form());
  } else if (op == "star") {
    result = kform_to_json(hodge_star(kform_from_json(read_json_file(a_path))));
  } else if (op == "wedge") {
    result = kform_to_json(
        wedge(kform_from_json(read_json_file(a_path)), kform_from_json(read_json_file(b_path))));
  } else if (op == "inner") {
    result = json{{"inner", inner(kform_from_json(read_json_file(a_path)),
                                  kform_from_json(read_json_file(b_path)))}};
  } else if (op == "pullback") {
    LinearMap8 m{matrix8_from_json(read_json_file(map_path))};
    result = kform_to_json(pullback(m, kform_from_json(read_json_file(a_path))));
  } else {
    throw std::invalid_argument("unknown forms op '" + op + "'");
  }
  emit(result, out_path);
  return kExitPass;
}

int run_split(const std::string& a_path, const std::optional<std::string>& out_path) {
  const KForm alpha = kform_from_json(read_json_file(a_path));
  if (alpha.grade != 2) throw std::invalid_argument("split: input form must have grade 2");
  const ProjectorPair& pp = cayley_projectors();
  const KForm p7 = pp.project7(alpha);
  const KForm p21 = pp.project21(alpha);
  emit(json{{"p7_norm", p7.coeffs.norm()},
            {"p21_norm", p21.coeffs.norm()},
            {"p7", kform_to_json(p7)},
            {"p21", kform_to_json(p21)}},
       out_path);
  return kExitPass;
}

int run_group(const std::string& convention, const std::optional<std::string>& out_path) {
  const Convention conv = convention_from_string(convention);
  json elements = json::array();
  bool all_member = true;
  for (const auto& g : gamma8_elements(conv)) {
    const bool member = verify_spin7_membership(g);
    all_member = all_member && member;
    elements.push_back({{"name", g.name},
                        {"matrix", matrix8_to_json(g.map.matrix)},
                        {"preserves_metric", g.map.is_orthogonal()},
                        {"preserves_cayley_form", member}});
  }
  const auto a = gamma8_generator_alpha(conv).matrix;
  const auto b = gamma8_generator_beta(conv).matrix;
  emit(json{{"convention", to_string(conv)},
            {"order", elements.size()},
            {"abelian", (a * b - b * a).lpNorm<Eigen::Infinity>() <= 1e-12},
            {"all_in_spin7", all_member},
            {"elements", elements}},
       out_path);
  return all_member ? kExitPass : kExitCheckFail;
}

int run_casd(const std::string& f_path, const std::string& convention,
             const std::optional<std::string>& out_path) {
  const CurvatureSample f = curvature_sample_from_json(read_json_file(f_path));
  const ComplexStructure cs = ComplexStructure::standard(convention_from_string(convention));
  const auto [r02, rtr] = complex_asd_residual(cs, f);
  emit(json{{"residual_02", r02}, {"residual_trace", rtr}, {"pi7_norm", pi7_norm(f)}}, out_path);
  return kExitPass;
}

int run_index(const std::string& file, bool su_bundle, const std::optional<std::string>& out_path) {
  const ChernData d = chern_data_from_json(read_json_file(file));
  const Int ind = index_u(d, su_bundle);
  emit(json{{"index", ind.convert_to<long long>()}}, out_path);
  return kExitPass;
}

int run_vdim(long long k, long long l, const std::optional<std::string>& out_path) {
  const Int vdim = example_vdim(k, l);
  const auto dim = [](long long m) {
    return h1_delta(-2 * m).convert_to<long long>();
  };
  const std::vector<long long> kx = {dim(k), dim(l)};
  const Int decomposed = index_decomposition(0, 3, kx);
  emit(json{{"vdim", vdim.convert_to<long long>()},
            {"decomposition",
             {{"dim_KZ", 0}, {"dim_CZ", 3}, {"dim_KX", kx},
              {"value", decomposed.convert_to<long long>()}}}},
       out_path);
  return vdim == decomposed ? kExitPass : kExitCheckFail;
}

int run_gluing_scan(double t_min, double t_max, int samples, const std::string& norm,
                    const std::string& csv_path, const std::optional<std::string>& out_path) {
  const std::vector<double> grid = log_spaced(t_min, t_max, samples);

  std::function<double(double)> fn;
  double expected = 0.0, tolerance = 0.0;
  bool fit_against_logt = false;
  bool lower_bound_only = false;
  if (norm == "l4err") {
    fn = [](double t) {
      return radial_norm(error_profile(GluingParams(t)), WeightedNormSpec(4, 0, scale_invariant_delta(4)));
    };
    expected = 1.0;
    tolerance = 0.1;
  } else if (norm == "l8curv") {
    fn = [](double t) {
      return radial_norm(curvature_profile(GluingParams(t)), WeightedNormSpec(8, 0, scale_invariant_delta(8)));
    };
    expected = -1.0;
    tolerance = 0.1;
  } else if (norm == "l8dchi") {
    fn = [](double t) {
      return radial_norm(dchi_profile(GluingParams(t)), WeightedNormSpec(8, 0, scale_invariant_delta(8)));
    };
    expected = -7.0 / 8.0;
    tolerance = 0.05;
    fit_against_logt = true;
  } else if (norm == "bound") {
    fn = approx_error_bound;
    expected = 1.0 / 3.0;
    tolerance = 0.05;
    lower_bound_only = true;
  } else {
    throw std::invalid_argument("unknown norm '" + norm + "' (expected l4err|l8curv|l8dchi|bound)");
  }

  json table = json::array();
  std::vector<double> xs, ys;
  for (double t : grid) {
    const double value = fn(t);
    table.push_back({{"t", t}, {"norm", value}});
    xs.push_back(fit_against_logt ? std::fabs(std::log(t)) : t);
    ys.push_back(value);
  }
  const ScalingFit fit = fit_loglog(xs, ys);
  const bool pass = lower_bound_only ? fit.exponent >= expected - tolerance
                                     : std::fabs(fit.exponent - expected) <= tolerance;

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::invalid_argument("cannot open CSV file '" + csv_path + "'");
    csv << "t,norm\n";
    for (std::size_t i = 0; i < grid.size(); ++i) csv << grid[i] << "," << ys[i] << "\n";
  }

  emit(json{{"norm", norm},
            {"table", table},
            {"fitted_exponent", fit.exponent},
            {"r_squared", fit.r_squared},
            {"expected_exponent", expected},
            {"tolerance", tolerance},
            {"abscissa", fit_against_logt ? "|log t|" : "t"},
            {"pass", pass}},
       out_path);
  return pass ? kExitPass : kExitCheckFail;
}

void write_field_binary(const std::string& path, const lattice::LatticeSpec& spec,
                        const lattice::GaugeField& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  // header: magic "SP7L", version byte, n, group tag; then little-endian
  // doubles in (site, direction, component) order
  out.write("SP7L", 4);
  const unsigned char version = 1;
  const unsigned char n = static_cast<unsigned char>(spec.n);
  const unsigned char group = spec.group == lattice::Group::u1 ? 0 : 1;
  out.put(static_cast<char>(version));
  out.put(static_cast<char>(n));
  out.put(static_cast<char>(group));
  static_assert(std::endian::native == std::endian::little, "field files are little-endian");
  out.write(reinterpret_cast<const char*>(a.a.data()),
            static_cast<std::streamsize>(sizeof(double) * static_cast<std::size_t>(a.a.size())));
}

int run_solve(int n, const std::string& group, std::uint64_t seed, double amp, int max_steps,
              double tol, const std::string& method, const std::string& field_path,
              const std::optional<std::string>& out_path) {
  const lattice::LatticeSpec spec(n, 1.0, lattice::group_from_string(group));
  const lattice::GaugeField a0 = lattice::random_field(spec, seed, amp);

  std::pair<lattice::GaugeField, lattice::SolveReport> solved =
      method == "picard" ? lattice::picard_iterate(spec, a0, max_steps, tol)
                         : lattice::gradient_descent(spec, a0, max_steps, tol);
  const auto& [a, rep] = solved;

  if (!field_path.empty()) write_field_binary(field_path, spec, a);

  json out{{"method", method},
           {"n", n},
           {"group", lattice::to_string(spec.group)},
           {"seed", seed},
           {"amplitude", amp},
           {"iterations", rep.iterations},
           {"converged", rep.converged},
           {"final_residual", rep.final_residual},
           {"gauge_divergence", lattice::gauge_fix_residual(spec, a)},
           {"residual_history", rep.residual_history},
           {"energy_history", rep.energy_history},
           {"ratio_history", rep.ratio_history}};
  if (method == "picard") out["linear_solve_residual"] = rep.linear_solve_residual;
  emit(out, out_path);
  return rep.converged ? kExitPass : kExitCheckFail;
}

int run_selfcheck_cmd(const std::optional<std::string>& out_path) {
  const auto results = run_selfcheck();
  emit(selfcheck_to_json(results), out_path);
  return all_pass(results) ? kExitPass : kExitCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin(7) instanton toolkit: Cayley-form algebra, 2-form splitting, index "
               "arithmetic, gluing scalings, and a flat 8-torus lattice solver"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "spin7-toolkit 1.0.0");
  app.failure_message(CLI::FailureMessage::help);

  std::optional<std::string> out_path;
  app.add_option("--output", out_path, "write JSON output to a file instead of stdout");

  auto* forms = app.add_subcommand("forms", "exterior algebra on K-forms");
  std::string forms_op, forms_a, forms_b, forms_map;
  forms->add_option("--op", forms_op, "wedge|star|inner|pullback|cayley")->required();
  forms->add_option("--a", forms_a, "first K-form JSON file");
  forms->add_option("--b", forms_b, "second K-form JSON file");
  forms->add_option("--map", forms_map, "8x8 matrix JSON file for pullback");

  auto* split = app.add_subcommand("split", "project a 2-form onto the 7 and 21 parts");
  std::string split_a;
  split->add_option("--file", split_a, "2-form JSON file")->required();

  auto* group = app.add_subcommand("group", "the order-8 group generated by alpha and beta");
  std::string group_convention = "I";
  group->add_option("--convention", group_convention, "complex-structure convention, I or II");

  auto* casd = app.add_subcommand("casd", "complex ASD residuals of a curvature sample");
  std::string casd_file, casd_convention = "I";
  casd->add_option("--file", casd_file, "CurvatureSample JSON file")->required();
  casd->add_option("--convention", casd_convention, "complex-structure convention, I or II");

  auto* index = app.add_subcommand("index", "index of the linearized operator from Chern data");
  std::string index_file;
  bool index_su = false;
  index->add_option("--file", index_file, "ChernData JSON file")->required();
  index->add_flag("--su", index_su, "use the su(E) rank correction r^2 -> r^2 - 1");

  auto* vdim = app.add_subcommand("vdim", "virtual dimension of the example moduli space");
  long long vdim_k = 0, vdim_l = 0;
  vdim->add_option("--k", vdim_k, "twist at the first glued pair")->required();
  vdim->add_option("--l", vdim_l, "twist at the second glued pair")->required();

  auto* scan = app.add_subcommand("gluing-scan", "scaling exponents of the gluing norms");
  double scan_tmin = 1e-5, scan_tmax = 1e-2;
  int scan_samples = 10;
  std::string scan_norm = "l4err", scan_csv;
  scan->add_option("--t-min", scan_tmin, "smallest neck scale");
  scan->add_option("--t-max", scan_tmax, "largest neck scale");
  scan->add_option("--samples", scan_samples, "number of log-spaced samples");
  scan->add_option("--norm", scan_norm, "l4err|l8curv|l8dchi|bound");
  scan->add_option("--csv", scan_csv, "also write a (t, norm) CSV table");

  auto* solve = app.add_subcommand("solve", "lattice solver on the periodic 8-grid");
  int solve_n = 2, solve_steps = 20000;
  std::string solve_group = "u1", solve_method = "gd", solve_field;
  std::uint64_t solve_seed = 1;
  double solve_amp = 1e-2, solve_tol = 1e-8;
  solve->add_option("--n", solve_n, "sites per axis (2..4)");
  solve->add_option("--group", solve_group, "u1|su2");
  solve->add_option("--seed", solve_seed, "random start seed");
  solve->add_option("--amp", solve_amp, "random start amplitude");
  solve->add_option("--max-steps", solve_steps, "iteration limit");
  solve->add_option("--tol", solve_tol, "convergence tolerance");
  solve->add_option("--method", solve_method, "gd|picard");
  solve->add_option("--field-out", solve_field, "write the final field (binary SP7L format)");

  auto* self = app.add_subcommand("selfcheck", "run the full invariant battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (forms->parsed()) return run_forms(forms_op, forms_a, forms_b, forms_map, out_path);
    if (split->parsed()) return run_split(split_a, out_path);
    if (group->parsed()) return run_group(group_convention, out_path);
    if (casd->parsed()) return run_casd(casd_file, casd_convention, out_path);
    if (index->parsed()) return run_index(index_file, index_su, out_path);
    if (vdim->parsed()) return run_vdim(vdim_k, vdim_l, out_path);
    if (scan->parsed())
      return run_gluing_scan(scan_tmin, scan_tmax, scan_samples, scan_norm, scan_csv, out_path);
    if (solve->parsed())
      return run_solve(solve_n, solve_group, solve_seed, solve_amp, solve_steps, solve_tol,
                       solve_method, solve_field, out_path);
    if (self->parsed()) return run_selfcheck_cmd(out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitCheckFail;
  }
  return kExitUsage;
}
