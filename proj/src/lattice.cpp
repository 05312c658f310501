#include "spin7/lattice.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "spin7/two_form_split.hpp"

namespace spin7 {
namespace lattice {

Group group_from_string(const std::string& s) {
  if (s == "u1" || s == "U1") return Group::u1;
  if (s == "su2" || s == "SU2") return Group::su2;
  throw std::invalid_argument("group must be 'u1' or 'su2'");
}

std::string to_string(Group g) { return g == Group::u1 ? "u1" : "su2"; }

int algebra_dim(Group g) { return g == Group::u1 ? 1 : 3; }

LatticeSpec::LatticeSpec(int n_, double spacing_, Group group_)
    : n(n_), spacing(spacing_), group(group_) {
  if (n < 2 || n > 4) throw std::invalid_argument("LatticeSpec: n must lie in 2..4 (n^8 <= 65536)");
  if (!(spacing > 0.0)) throw std::invalid_argument("LatticeSpec: spacing must be positive");
}

long long LatticeSpec::sites() const {
  long long s = 1;
  for (int d = 0; d < 8; ++d) s *= n;
  return s;
}

int LatticeSpec::field_size() const {
  return static_cast<int>(sites()) * 8 * algebra_dim(group);
}

namespace {

// site index: axis 0 slowest, axis 7 fastest
struct Topology {
  int n;
  int sites;
  std::vector<std::int32_t> fwd;  // [site*8 + d]
  std::vector<std::int32_t> bwd;

  explicit Topology(const LatticeSpec& spec) : n(spec.n), sites(static_cast<int>(spec.sites())) {
    fwd.resize(static_cast<std::size_t>(sites) * 8);
    bwd.resize(static_cast<std::size_t>(sites) * 8);
    std::array<int, 8> stride;
    stride[7] = 1;
    for (int d = 6; d >= 0; --d) stride[d] = stride[d + 1] * n;
    std::array<int, 8> x{};
    for (int s = 0; s < sites; ++s) {
      for (int d = 0; d < 8; ++d) {
        const int up = (x[d] + 1) % n, dn = (x[d] + n - 1) % n;
        fwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(d)] =
            static_cast<std::int32_t>(s + (up - x[d]) * stride[d]);
        bwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(d)] =
            static_cast<std::int32_t>(s + (dn - x[d]) * stride[d]);
      }
      for (int d = 7; d >= 0; --d) {
        if (++x[d] < n) break;
        x[d] = 0;
      }
    }
  }
};

struct PairTable {
  std::array<std::array<int, 8>, 8> rank{};  // rank[mu][nu] for mu != nu
  std::array<std::pair<int, int>, 28> dirs{};

  PairTable() {
    for (int mu = 0; mu < 8; ++mu)
      for (int nu = mu + 1; nu < 8; ++nu) {
        const int r = mask_rank((1u << mu) | (1u << nu));
        rank[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = r;
        rank[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] = r;
        dirs[static_cast<std::size_t>(r)] = {mu, nu};
      }
  }
};

const PairTable& pairs() {
  static const PairTable t;
  return t;
}

const Eigen::Matrix<double, 28, 28>& p7_matrix() {
  static const Eigen::Matrix<double, 28, 28> m = [] {
    Eigen::Matrix<double, 28, 28> out =
        0.25 * (lambda_operator(cayley_form()).matrix + Eigen::MatrixXd::Identity(28, 28));
    return out;
  }();
  return m;
}

inline int aidx(int site, int dir, int comp, int adim) { return (site * 8 + dir) * adim + comp; }
inline int fidx(int site, int pair, int comp, int adim) { return (site * 28 + pair) * adim + comp; }

// [u, v] in the (i sigma) basis: [u,v]_c = -2 eps_{abc} u_a v_b; zero for u(1)
inline void commutator(const double* u, const double* v, double* out, int adim) {
  if (adim == 1) {
    out[0] = 0.0;
    return;
  }
  out[0] = -2.0 * (u[1] * v[2] - u[2] * v[1]);
  out[1] = -2.0 * (u[2] * v[0] - u[0] * v[2]);
  out[2] = -2.0 * (u[0] * v[1] - u[1] * v[0]);
}

void check_field(const LatticeSpec& spec, const GaugeField& a, const char* what) {
  if (a.a.size() != spec.field_size())
    throw std::invalid_argument(std::string(what) + ": field size does not match lattice spec");
  if (!a.a.allFinite()) throw std::invalid_argument(std::string(what) + ": field has non-finite entries");
}

CurvatureField curvature_impl(const LatticeSpec& spec, const Topology& topo, const GaugeField& a) {
  const int adim = algebra_dim(spec.group);
  const double invh = 1.0 / spec.spacing;
  CurvatureField F;
  F.f.setZero(static_cast<Eigen::Index>(topo.sites) * 28 * adim);
  double comm[3];
  for (int s = 0; s < topo.sites; ++s) {
    for (const auto& [mu, nu] : pairs().dirs) {
      const int p = pairs().rank[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
      const int smu = topo.fwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(mu)];
      const int snu = topo.fwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(nu)];
      commutator(&a.a[aidx(s, mu, 0, adim)], &a.a[aidx(s, nu, 0, adim)], comm, adim);
      for (int c = 0; c < adim; ++c) {
        const double dmu_anu = (a.a[aidx(smu, nu, c, adim)] - a.a[aidx(s, nu, c, adim)]) * invh;
        const double dnu_amu = (a.a[aidx(snu, mu, c, adim)] - a.a[aidx(s, mu, c, adim)]) * invh;
        F.f[fidx(s, p, c, adim)] = dmu_anu - dnu_amu + (adim == 1 ? 0.0 : comm[c]);
      }
    }
  }
  return F;
}

// p7 applied along the 28-index for every (site, component)
void project7_inplace(const LatticeSpec& spec, int sites, CurvatureField& F) {
  const int adim = algebra_dim(spec.group);
  const auto& P = p7_matrix();
  Eigen::Matrix<double, 28, 1> v, w;
  for (int s = 0; s < sites; ++s) {
    for (int c = 0; c < adim; ++c) {
      for (int p = 0; p < 28; ++p) v[p] = F.f[fidx(s, p, c, adim)];
      w.noalias() = P * v;
      for (int p = 0; p < 28; ++p) F.f[fidx(s, p, c, adim)] = w[p];
    }
  }
}

}  // namespace

GaugeField zero_field(const LatticeSpec& spec) {
  GaugeField a;
  a.a.setZero(spec.field_size());
  return a;
}

GaugeField random_field(const LatticeSpec& spec, std::uint64_t seed, double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  GaugeField a;
  a.a.resize(spec.field_size());
  for (Eigen::Index i = 0; i < a.a.size(); ++i) a.a[i] = dist(rng);
  return a;
}

CurvatureField curvature(const LatticeSpec& spec, const GaugeField& a) {
  check_field(spec, a, "curvature");
  const Topology topo(spec);
  return curvature_impl(spec, topo, a);
}

double energy(const LatticeSpec& spec, const GaugeField& a) {
  check_field(spec, a, "energy");
  const Topology topo(spec);
  CurvatureField F = curvature_impl(spec, topo, a);
  project7_inplace(spec, topo.sites, F);
  return F.f.squaredNorm();
}

GaugeField gradient(const LatticeSpec& spec, const GaugeField& a) {
  check_field(spec, a, "gradient");
  const Topology topo(spec);
  const int adim = algebra_dim(spec.group);
  const double invh = 1.0 / spec.spacing;

  CurvatureField G = curvature_impl(spec, topo, a);
  project7_inplace(spec, topo.sites, G);  // G = p7 F; gradient uses 2 p7 F
  G.f *= 2.0;

  GaugeField grad = zero_field(spec);
  double comm[3];
  for (int s = 0; s < topo.sites; ++s) {
    for (int dir = 0; dir < 8; ++dir) {
      for (int mu = 0; mu < 8; ++mu) {
        if (mu == dir) continue;
        const int p = pairs().rank[static_cast<std::size_t>(mu)][static_cast<std::size_t>(dir)];
        const double sgn = mu < dir ? 1.0 : -1.0;  // G_{mu,dir} from the stored G_{min,max}
        const int sm = topo.bwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(mu)];
        for (int c = 0; c < adim; ++c) {
          grad.a[aidx(s, dir, c, adim)] +=
              sgn * (G.f[fidx(sm, p, c, adim)] - G.f[fidx(s, p, c, adim)]) * invh;
        }
        if (adim > 1) {
          // d/d a_dir of <G_{dir,mu}, [a_dir, a_mu]> term: [a_mu, G_{dir,mu}]
          double gdm[3];
          const double sgn2 = dir < mu ? 1.0 : -1.0;
          for (int c = 0; c < adim; ++c) gdm[c] = sgn2 * G.f[fidx(s, p, c, adim)];
          commutator(&a.a[aidx(s, mu, 0, adim)], gdm, comm, adim);
          for (int c = 0; c < adim; ++c) grad.a[aidx(s, dir, c, adim)] += comm[c];
        }
      }
    }
  }
  return grad;
}

double gauge_fix_residual(const LatticeSpec& spec, const GaugeField& a) {
  check_field(spec, a, "gauge_fix_residual");
  const Topology topo(spec);
  const int adim = algebra_dim(spec.group);
  const double invh = 1.0 / spec.spacing;
  double sq = 0.0;
  for (int s = 0; s < topo.sites; ++s) {
    for (int c = 0; c < adim; ++c) {
      double div = 0.0;
      for (int mu = 0; mu < 8; ++mu) {
        const int sm = topo.bwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(mu)];
        div += (a.a[aidx(s, mu, c, adim)] - a.a[aidx(sm, mu, c, adim)]) * invh;
      }
      sq += div * div;
    }
  }
  return std::sqrt(sq);
}

std::pair<GaugeField, SolveReport> gradient_descent(const LatticeSpec& spec, const GaugeField& a0,
                                                    int max_steps, double tol) {
  check_field(spec, a0, "gradient_descent");
  if (!(tol > 0.0)) throw std::invalid_argument("gradient_descent: tol must be positive");
  constexpr double kArmijoC = 1e-4;

  GaugeField a = a0;
  SolveReport rep;
  double e = energy(spec, a);
  if (!std::isfinite(e)) throw std::runtime_error("gradient_descent: non-finite energy");
  rep.energy_history.push_back(e);
  rep.residual_history.push_back(std::sqrt(e));
  double prev_step_norm = -1.0;

  while (rep.iterations < max_steps && std::sqrt(e) >= tol) {
    const GaugeField g = gradient(spec, a);
    const double gsq = g.a.squaredNorm();
    if (gsq == 0.0) break;  // critical point
    double step = 1.0;
    GaugeField trial;
    double etrial = e;
    bool accepted = false;
    for (int bt = 0; bt < 80; ++bt) {
      trial.a = a.a - step * g.a;
      etrial = energy(spec, trial);
      if (!std::isfinite(etrial)) throw std::runtime_error("gradient_descent: non-finite energy");
      if (etrial <= e - kArmijoC * step * gsq) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no descent step found at machine precision
    const double step_norm = step * std::sqrt(gsq);
    if (prev_step_norm > 0.0) rep.ratio_history.push_back(step_norm / prev_step_norm);
    prev_step_norm = step_norm;
    a = std::move(trial);
    e = etrial;
    ++rep.iterations;
    rep.energy_history.push_back(e);
    rep.residual_history.push_back(std::sqrt(e));
  }
  rep.final_residual = std::sqrt(e);
  rep.converged = rep.final_residual < tol;
  return {std::move(a), std::move(rep)};
}

namespace {

// linearization at the background b: v -> (div_b v, p7 d_b v)
struct Linearization {
  const LatticeSpec& spec;
  const Topology& topo;
  const GaugeField& background;
  int adim;
  double invh;

  Linearization(const LatticeSpec& s, const Topology& t, const GaugeField& b)
      : spec(s), topo(t), background(b), adim(algebra_dim(s.group)), invh(1.0 / s.spacing) {}

  Eigen::Index rows0() const { return static_cast<Eigen::Index>(topo.sites) * adim; }
  Eigen::Index rows7() const { return static_cast<Eigen::Index>(topo.sites) * 28 * adim; }
  Eigen::Index cols() const { return static_cast<Eigen::Index>(topo.sites) * 8 * adim; }

  void apply(const Eigen::VectorXd& v, Eigen::VectorXd& out0, Eigen::VectorXd& out7) const {
    const auto& b = background.a;
    out0.setZero(rows0());
    out7.setZero(rows7());
    double comm[3];
    for (int s = 0; s < topo.sites; ++s) {
      for (int mu = 0; mu < 8; ++mu) {
        const int sm = topo.bwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(mu)];
        for (int c = 0; c < adim; ++c)
          out0[s * adim + c] += (v[aidx(s, mu, c, adim)] - v[aidx(sm, mu, c, adim)]) * invh;
        if (adim > 1) {
          commutator(&b[aidx(s, mu, 0, adim)], &v[aidx(s, mu, 0, adim)], comm, adim);
          for (int c = 0; c < adim; ++c) out0[s * adim + c] += comm[c];
        }
      }
      for (const auto& [mu, nu] : pairs().dirs) {
        const int p = pairs().rank[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
        const int smu = topo.fwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(mu)];
        const int snu = topo.fwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(nu)];
        for (int c = 0; c < adim; ++c) {
          out7[fidx(s, p, c, adim)] =
              (v[aidx(smu, nu, c, adim)] - v[aidx(s, nu, c, adim)]) * invh -
              (v[aidx(snu, mu, c, adim)] - v[aidx(s, mu, c, adim)]) * invh;
        }
        if (adim > 1) {
          commutator(&b[aidx(s, mu, 0, adim)], &v[aidx(s, nu, 0, adim)], comm, adim);
          for (int c = 0; c < adim; ++c) out7[fidx(s, p, c, adim)] += comm[c];
          commutator(&v[aidx(s, mu, 0, adim)], &b[aidx(s, nu, 0, adim)], comm, adim);
          for (int c = 0; c < adim; ++c) out7[fidx(s, p, c, adim)] += comm[c];
        }
      }
    }
    // project the 2-form block
    const auto& P = p7_matrix();
    Eigen::Matrix<double, 28, 1> col, proj;
    for (int s = 0; s < topo.sites; ++s) {
      for (int c = 0; c < adim; ++c) {
        for (int p = 0; p < 28; ++p) col[p] = out7[fidx(s, p, c, adim)];
        proj.noalias() = P * col;
        for (int p = 0; p < 28; ++p) out7[fidx(s, p, c, adim)] = proj[p];
      }
    }
  }

  void apply_transpose(const Eigen::VectorXd& w0, const Eigen::VectorXd& w7,
                       Eigen::VectorXd& out) const {
    const auto& b = background.a;
    out.setZero(cols());

    // p7 is symmetric: first project the 2-form block
    Eigen::VectorXd g(rows7());
    const auto& P = p7_matrix();
    Eigen::Matrix<double, 28, 1> col, proj;
    for (int s = 0; s < topo.sites; ++s) {
      for (int c = 0; c < adim; ++c) {
        for (int p = 0; p < 28; ++p) col[p] = w7[fidx(s, p, c, adim)];
        proj.noalias() = P * col;
        for (int p = 0; p < 28; ++p) g[fidx(s, p, c, adim)] = proj[p];
      }
    }

    double comm[3];
    for (int s = 0; s < topo.sites; ++s) {
      // transpose of the divergence block
      for (int mu = 0; mu < 8; ++mu) {
        const int sp = topo.fwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(mu)];
        for (int c = 0; c < adim; ++c)
          out[aidx(s, mu, c, adim)] += (w0[s * adim + c] - w0[sp * adim + c]) * invh;
        if (adim > 1) {
          // adjoint of v -> [b, v]: w -> [w, b]
          commutator(&w0[s * adim], &b[aidx(s, mu, 0, adim)], comm, adim);
          for (int c = 0; c < adim; ++c) out[aidx(s, mu, c, adim)] += comm[c];
        }
      }
      // transpose of the projected derivative block
      for (int dir = 0; dir < 8; ++dir) {
        for (int mu = 0; mu < 8; ++mu) {
          if (mu == dir) continue;
          const int p = pairs().rank[static_cast<std::size_t>(mu)][static_cast<std::size_t>(dir)];
          const double sgn = mu < dir ? 1.0 : -1.0;
          const int sm = topo.bwd[static_cast<std::size_t>(s) * 8 + static_cast<std::size_t>(mu)];
          for (int c = 0; c < adim; ++c) {
            out[aidx(s, dir, c, adim)] +=
                sgn * (g[fidx(sm, p, c, adim)] - g[fidx(s, p, c, adim)]) * invh;
          }
          if (adim > 1) {
            // adjoint of the [b_mu, v_dir] term: [g_{mu,dir}, b_mu]
            double gmd[3];
            for (int c = 0; c < adim; ++c) gmd[c] = sgn * g[fidx(s, p, c, adim)];
            commutator(gmd, &b[aidx(s, mu, 0, adim)], comm, adim);
            for (int c = 0; c < adim; ++c) out[aidx(s, dir, c, adim)] += comm[c];
          }
        }
      }
    }
  }
};

// conjugate gradient on the normal equations; minimal-norm least-squares
// solution for rank-deficient operators when started from zero
struct CglsResult {
  Eigen::VectorXd x;
  double rel_residual = 0.0;
  int iterations = 0;
};

CglsResult cgls(const Linearization& lin, const Eigen::VectorXd& b0, const Eigen::VectorXd& b7,
                int max_iter, double tol) {
  CglsResult res;
  res.x.setZero(lin.cols());
  Eigen::VectorXd r0 = b0, r7 = b7;
  Eigen::VectorXd s(lin.cols());
  lin.apply_transpose(r0, r7, s);
  const double snorm0 = s.norm();
  if (snorm0 == 0.0) {
    res.rel_residual = std::sqrt(r0.squaredNorm() + r7.squaredNorm()) /
                       std::max(1e-300, std::sqrt(b0.squaredNorm() + b7.squaredNorm()));
    return res;
  }
  Eigen::VectorXd p = s;
  double gamma = s.squaredNorm();
  Eigen::VectorXd q0(lin.rows0()), q7(lin.rows7());
  for (int it = 0; it < max_iter; ++it) {
    lin.apply(p, q0, q7);
    const double qsq = q0.squaredNorm() + q7.squaredNorm();
    if (qsq == 0.0) break;
    const double alpha = gamma / qsq;
    res.x += alpha * p;
    r0 -= alpha * q0;
    r7 -= alpha * q7;
    lin.apply_transpose(r0, r7, s);
    const double gamma_new = s.squaredNorm();
    res.iterations = it + 1;
    if (std::sqrt(gamma_new) <= tol * snorm0) break;
    p = s + (gamma_new / gamma) * p;
    gamma = gamma_new;
  }
  const double bnorm = std::sqrt(b0.squaredNorm() + b7.squaredNorm());
  res.rel_residual = bnorm == 0.0 ? 0.0 : std::sqrt(r0.squaredNorm() + r7.squaredNorm()) / bnorm;
  return res;
}

}  // namespace

std::pair<GaugeField, SolveReport> picard_iterate(const LatticeSpec& spec, const GaugeField& a0,
                                                  int k_max, double tol) {
  check_field(spec, a0, "picard_iterate");
  if (!(tol > 0.0)) throw std::invalid_argument("picard_iterate: tol must be positive");
  const Topology topo(spec);
  const int adim = algebra_dim(spec.group);
  const Linearization lin(spec, topo, a0);

  CurvatureField F0 = curvature_impl(spec, topo, a0);
  project7_inplace(spec, topo.sites, F0);
  const Eigen::VectorXd rhs7_base = -F0.f;
  const Eigen::VectorXd rhs0 = Eigen::VectorXd::Zero(lin.rows0());

  SolveReport rep;
  const int cg_cap = 40 * static_cast<int>(lin.cols());
  Eigen::VectorXd a_prev = Eigen::VectorXd::Zero(lin.cols());
  double prev_diff = -1.0;

  GaugeField total;
  for (int k = 1; k <= k_max; ++k) {
    Eigen::VectorXd rhs7 = rhs7_base;
    if (adim > 1) {
      // quadratic term p7(a^k ^ a^k) from the previous iterate
      GaugeField prev{a_prev};
      CurvatureField Q;
      Q.f.setZero(lin.rows7());
      double comm[3];
      for (int s = 0; s < topo.sites; ++s) {
        for (const auto& [mu, nu] : pairs().dirs) {
          const int p = pairs().rank[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
          commutator(&prev.a[aidx(s, mu, 0, adim)], &prev.a[aidx(s, nu, 0, adim)], comm, adim);
          for (int c = 0; c < adim; ++c) Q.f[fidx(s, p, c, adim)] = comm[c];
        }
      }
      project7_inplace(spec, topo.sites, Q);
      rhs7 -= Q.f;
    }

    const CglsResult sol = cgls(lin, rhs0, rhs7, cg_cap, 1e-13);
    if (k == 1) {
      rep.linear_solve_residual = sol.rel_residual;
      if (sol.rel_residual > 1e-6)
        throw std::runtime_error("linearization not surjective on this background");
    }

    const double diff = (sol.x - a_prev).norm();
    if (prev_diff > 0.0) rep.ratio_history.push_back(diff / prev_diff);
    prev_diff = diff;
    a_prev = sol.x;
    rep.iterations = k;

    total.a = a0.a + a_prev;
    const double e = energy(spec, total);
    rep.energy_history.push_back(e);
    rep.residual_history.push_back(std::sqrt(e));

    if (adim == 1 || diff < tol) {  // abelian: the iteration map is constant
      rep.converged = true;
      break;
    }
  }
  total.a = a0.a + a_prev;
  rep.final_residual = std::sqrt(energy(spec, total));
  return {std::move(total), std::move(rep)};
}

FourierOracleU1::FourierOracleU1(const LatticeSpec& spec) : spec_(spec) {
  if (spec.group != Group::u1)
    throw std::invalid_argument("FourierOracleU1: oracle requires the abelian group");
  const int n = spec.n;
  const int sites = static_cast<int>(spec.sites());
  const auto& P = p7_matrix();

  std::array<int, 8> k{};
  for (int m = 0; m < sites; ++m) {
    wave_vectors_.push_back(k);
    Eigen::Matrix<std::complex<double>, 8, 1> s;
    for (int d = 0; d < 8; ++d) {
      const double theta = 2.0 * std::numbers::pi * k[static_cast<std::size_t>(d)] / n;
      s[d] = (std::polar(1.0, theta) - 1.0) / spec.spacing;
    }
    Eigen::Matrix<std::complex<double>, 28, 8> D = Eigen::Matrix<std::complex<double>, 28, 8>::Zero();
    for (int p = 0; p < 28; ++p) {
      const auto [mu, nu] = pairs().dirs[static_cast<std::size_t>(p)];
      D(p, nu) += s[mu];
      D(p, mu) -= s[nu];
    }
    const Eigen::Matrix<std::complex<double>, 28, 8> A = P.cast<std::complex<double>>() * D;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = std::max(1e-12, sv.size() > 0 ? 1e-10 * sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv[i] > cut) ++rank;
    null_bases_.push_back(svd.matrixV().rightCols(8 - rank));
    null_dims_.push_back(8 - rank);

    for (int d = 7; d >= 0; --d) {
      if (++k[static_cast<std::size_t>(d)] < n) break;
      k[static_cast<std::size_t>(d)] = 0;
    }
  }
}

int FourierOracleU1::total_null_dim() const {
  int total = 0;
  for (int d : null_dims_) total += d;
  return total;
}

Eigen::Matrix<std::complex<double>, 8, 1> FourierOracleU1::symbol(int mode_index) const {
  const auto& k = wave_vectors_[static_cast<std::size_t>(mode_index)];
  Eigen::Matrix<std::complex<double>, 8, 1> s;
  for (int d = 0; d < 8; ++d) {
    const double theta = 2.0 * std::numbers::pi * k[static_cast<std::size_t>(d)] / spec_.n;
    s[d] = (std::polar(1.0, theta) - 1.0) / spec_.spacing;
  }
  return s;
}

double FourierOracleU1::membership_residual(const GaugeField& a) const {
  check_field(spec_, a, "membership_residual");
  const int n = spec_.n;
  const int sites = static_cast<int>(spec_.sites());
  const double norml = 1.0 / std::sqrt(static_cast<double>(sites));

  // coordinates of every site, axis 0 slowest
  std::vector<std::array<int, 8>> coords(static_cast<std::size_t>(sites));
  std::array<int, 8> x{};
  for (int s = 0; s < sites; ++s) {
    coords[static_cast<std::size_t>(s)] = x;
    for (int d = 7; d >= 0; --d) {
      if (++x[static_cast<std::size_t>(d)] < n) break;
      x[static_cast<std::size_t>(d)] = 0;
    }
  }

  double sq = 0.0;
  for (int m = 0; m < sites; ++m) {
    const auto& k = wave_vectors_[static_cast<std::size_t>(m)];
    Eigen::Matrix<std::complex<double>, 8, 1> ahat = Eigen::Matrix<std::complex<double>, 8, 1>::Zero();
    for (int s = 0; s < sites; ++s) {
      int dot = 0;
      for (int d = 0; d < 8; ++d) dot += k[static_cast<std::size_t>(d)] * coords[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)];
      const std::complex<double> phase = std::polar(norml, -2.0 * std::numbers::pi * dot / n);
      for (int mu = 0; mu < 8; ++mu) ahat[mu] += phase * a.a[aidx(s, mu, 0, 1)];
    }
    const auto& N = null_bases_[static_cast<std::size_t>(m)];
    const Eigen::VectorXcd resid = ahat - N * (N.adjoint() * ahat);
    sq += resid.squaredNorm();
  }
  return std::sqrt(sq);
}

GaugeField FourierOracleU1::mode_field(int mode_index, int null_column, double amplitude) const {
  const auto& N = null_bases_[static_cast<std::size_t>(mode_index)];
  if (null_column < 0 || null_column >= N.cols())
    throw std::invalid_argument("mode_field: null column out of range");
  const auto& k = wave_vectors_[static_cast<std::size_t>(mode_index)];
  const int n = spec_.n;
  const int sites = static_cast<int>(spec_.sites());
  GaugeField a = zero_field(spec_);
  std::array<int, 8> x{};
  for (int s = 0; s < sites; ++s) {
    int dot = 0;
    for (int d = 0; d < 8; ++d) dot += k[static_cast<std::size_t>(d)] * x[static_cast<std::size_t>(d)];
    const std::complex<double> phase = std::polar(amplitude, 2.0 * std::numbers::pi * dot / n);
    for (int mu = 0; mu < 8; ++mu)
      a.a[aidx(s, mu, 0, 1)] = (phase * N(mu, null_column)).real();
    for (int d = 7; d >= 0; --d) {
      if (++x[static_cast<std::size_t>(d)] < n) break;
      x[static_cast<std::size_t>(d)] = 0;
    }
  }
  return a;
}

GaugeField apply_axis_map(const LatticeSpec& spec, const LinearMap8& g, const GaugeField& a) {
  check_field(spec, a, "apply_axis_map");
  const auto& m = g.matrix;
  std::array<int, 8> perm{};
  std::array<int, 8> sign{};
  for (int i = 0; i < 8; ++i) {
    int found = -1;
    for (int j = 0; j < 8; ++j) {
      const double v = m(i, j);
      if (v == 0.0) continue;
      if ((v != 1.0 && v != -1.0) || found != -1)
        throw std::invalid_argument("apply_axis_map: map must be a signed permutation");
      found = j;
      perm[static_cast<std::size_t>(i)] = j;
      sign[static_cast<std::size_t>(i)] = v > 0 ? 1 : -1;
    }
    if (found == -1) throw std::invalid_argument("apply_axis_map: map must be a signed permutation");
  }

  const int n = spec.n;
  const int sites = static_cast<int>(spec.sites());
  const int adim = algebra_dim(spec.group);
  std::array<int, 8> stride;
  stride[7] = 1;
  for (int d = 6; d >= 0; --d) stride[d] = stride[d + 1] * n;

  GaugeField out = zero_field(spec);
  std::array<int, 8> x{};
  for (int s = 0; s < sites; ++s) {
    // image site y = g(x), coordinates wrapped mod n
    int y = 0;
    for (int i = 0; i < 8; ++i) {
      const int v = sign[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      y += ((v % n) + n) % n * stride[i];
    }
    // pullback of a 1-form: (g^* a)_mu(x) = sum_nu m(nu, mu) a_nu(g x)
    for (int mu = 0; mu < 8; ++mu) {
      for (int nu = 0; nu < 8; ++nu) {
        const double w = m(nu, mu);
        if (w == 0.0) continue;
        for (int c = 0; c < adim; ++c)
          out.a[aidx(s, mu, c, adim)] += w * a.a[aidx(y, nu, c, adim)];
      }
    }
    for (int d = 7; d >= 0; --d) {
      if (++x[static_cast<std::size_t>(d)] < n) break;
      x[static_cast<std::size_t>(d)] = 0;
    }
  }
  return out;
}

}  // namespace lattice
}  // namespace spin7
