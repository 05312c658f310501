#include "spin7/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spin7 {

GluingParams::GluingParams(double t_, double zeta_) : t(t_), zeta(zeta_) {
  if (!(t > 0.0) || !(t <= 1.0)) throw std::invalid_argument("GluingParams: t must lie in (0, 1]");
  if (!(zeta > 0.0)) throw std::invalid_argument("GluingParams: zeta must be positive");
}

bool GluingParams::interpolation_smallness_ok() const {
  return 2.0 * std::pow(t, 0.8) <= std::pow(t, 0.75);
}

RadiusBands radius_bands(const GluingParams& gp) {
  RadiusBands b{gp.t, std::pow(gp.t, 5.0 / 6.0) * gp.zeta, std::pow(gp.t, 0.75) * gp.zeta,
                gp.zeta, 1.0};
  if (!(b.neck < b.inner_overlap && b.inner_overlap < b.outer_overlap &&
        b.outer_overlap <= b.zeta && b.zeta <= b.outer))
    throw std::invalid_argument("radius_bands: band edges are not increasing (t too large)");
  return b;
}

namespace {

// quintic smoothstep on [0,1]
double smoothstep5(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

double smoothstep5_du(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  return 30.0 * u * u * (1.0 - u) * (1.0 - u);
}

constexpr double kPlateauLo = 0.75;      // chi = 0 for x <= 3/4
constexpr double kPlateauHi = 5.0 / 6.0; // chi = 1 for x >= 5/6

}  // namespace

double cutoff_chi(const GluingParams& gp, double rho) {
  if (!(rho >= gp.t && rho <= 1.0)) throw std::invalid_argument("cutoff_chi: rho outside [t, 1]");
  if (gp.t >= 1.0) throw std::invalid_argument("cutoff_chi: t = 1 has no band");
  const double x = std::log(rho) / std::log(gp.t);
  return smoothstep5((x - kPlateauLo) / (kPlateauHi - kPlateauLo));
}

double cutoff_chi_drho(const GluingParams& gp, double rho) {
  if (!(rho >= gp.t && rho <= 1.0)) throw std::invalid_argument("cutoff_chi: rho outside [t, 1]");
  if (gp.t >= 1.0) throw std::invalid_argument("cutoff_chi: t = 1 has no band");
  const double x = std::log(rho) / std::log(gp.t);
  const double du = smoothstep5_du((x - kPlateauLo) / (kPlateauHi - kPlateauLo)) /
                    (kPlateauHi - kPlateauLo);
  return du / (rho * std::log(gp.t));
}

double RadialProfile::operator()(double rho) const {
  for (const auto& piece : pieces)
    if (rho >= piece.lo && rho <= piece.hi) return piece.f(rho);
  throw std::invalid_argument("RadialProfile: rho outside domain");
}

RadialProfile error_profile(const GluingParams& gp) {
  const RadiusBands b = radius_bands(gp);
  const double t6 = std::pow(gp.t, 6.0);
  RadialProfile p;
  p.pieces.push_back({b.neck, b.inner_overlap, [](double) { return 0.0; }});
  p.pieces.push_back({b.inner_overlap, b.outer_overlap,
                      [t6](double rho) { return t6 * std::pow(rho, -8.0) + 1.0; }});
  p.pieces.push_back({b.outer_overlap, 1.0, [](double) { return 0.0; }});
  return p;
}

RadialProfile curvature_profile(const GluingParams& gp) {
  const RadiusBands b = radius_bands(gp);
  const double t6 = std::pow(gp.t, 6.0);
  const auto decay = [t6](double rho) { return t6 * std::pow(rho, -8.0); };
  RadialProfile p;
  p.pieces.push_back({b.neck, b.inner_overlap, decay});
  p.pieces.push_back({b.inner_overlap, b.outer_overlap,
                      [t6](double rho) { return t6 * std::pow(rho, -8.0) + 1.0; }});
  p.pieces.push_back({b.outer_overlap, 1.0, [](double) { return 1.0; }});
  return p;
}

RadialProfile dchi_profile(const GluingParams& gp) {
  const RadiusBands b = radius_bands(gp);
  RadialProfile p;
  p.pieces.push_back({b.neck, b.inner_overlap, [](double) { return 0.0; }});
  p.pieces.push_back({b.inner_overlap, b.outer_overlap,
                      [gp](double rho) { return std::fabs(cutoff_chi_drho(gp, rho)); }});
  p.pieces.push_back({b.outer_overlap, 1.0, [](double) { return 0.0; }});
  return p;
}

WeightedNormSpec::WeightedNormSpec(int p_, int derivative_count_, double delta_)
    : p(p_), derivative_count(derivative_count_), delta(delta_) {
  if (p < 1) throw std::invalid_argument("WeightedNormSpec: p must be >= 1");
  if (derivative_count != 0)
    throw std::invalid_argument("WeightedNormSpec: only derivative_count = 0 is supported");
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr int kGaussN = 16;
constexpr double kGaussX[kGaussN] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
constexpr double kGaussW[kGaussN] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double integrate_piece_log(const std::function<double(double)>& g, double lo, double hi,
                           int panels) {
  // integrate g(rho) drho over [lo, hi] with log-spaced panels
  const double llo = std::log(lo), lhi = std::log(hi);
  double total = 0.0;
  for (int panel = 0; panel < panels; ++panel) {
    const double a = llo + (lhi - llo) * panel / panels;
    const double b = llo + (lhi - llo) * (panel + 1) / panels;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int q = 0; q < kGaussN; ++q) {
      const double u = mid + half * kGaussX[q];
      const double rho = std::exp(u);
      const double val = g(rho) * rho;  // drho = rho du
      if (!std::isfinite(val))
        throw std::runtime_error("radial_norm: non-integrable singularity near rho = " +
                                 std::to_string(rho));
      acc += kGaussW[q] * val;
    }
    total += half * acc;
  }
  return total;
}

}  // namespace

double radial_norm(const RadialProfile& profile, const WeightedNormSpec& spec) {
  const double exponent = -spec.p * spec.delta - 1.0;  // rho^{-p delta} rho^{-8} rho^7
  double value = 0.0;
  int panels = 64;
  double prev = -1.0;
  for (int round = 0; round < 12; ++round) {
    value = 0.0;
    for (const auto& piece : profile.pieces) {
      if (piece.hi <= piece.lo) continue;
      const auto g = [&piece, &spec, exponent](double rho) {
        return std::pow(piece.f(rho), spec.p) * std::pow(rho, exponent);
      };
      // panel count proportional to the piece's share of the log range
      const double share = std::log(piece.hi / piece.lo) / std::log(profile.hi() / profile.lo());
      const int piece_panels = std::max(8, static_cast<int>(std::ceil(panels * share)));
      value += integrate_piece_log(g, piece.lo, piece.hi, piece_panels);
    }
    if (prev >= 0.0 && std::fabs(value - prev) <= 1e-8 * std::max(value, 1e-300)) break;
    prev = value;
    panels *= 2;
  }
  return std::pow(value, 1.0 / spec.p);
}

ScalingFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_loglog: need matching lists with >= 2 points");
  const int n = static_cast<int>(xs.size());
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (int i = 0; i < n; ++i) {
    if (!(xs[static_cast<std::size_t>(i)] > 0.0) || !(ys[static_cast<std::size_t>(i)] > 0.0))
      throw std::invalid_argument("fit_loglog: inputs must be positive");
    lx[static_cast<std::size_t>(i)] = std::log(xs[static_cast<std::size_t>(i)]);
    ly[static_cast<std::size_t>(i)] = std::log(ys[static_cast<std::size_t>(i)]);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dx = lx[static_cast<std::size_t>(i)] - mx;
    const double dy = ly[static_cast<std::size_t>(i)] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_loglog: degenerate grid");
  ScalingFit fit;
  fit.exponent = sxy / sxx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

ScalingFit scaling_fit(const std::function<double(double)>& norm_fn,
                       const std::vector<double>& t_grid) {
  if (t_grid.size() < 5) throw std::invalid_argument("scaling_fit: need at least 5 grid points");
  const auto [lo, hi] = std::minmax_element(t_grid.begin(), t_grid.end());
  if (!(*lo > 0.0) || *hi / *lo < 100.0)
    throw std::invalid_argument("scaling_fit: grid must span at least two decades");
  std::vector<double> ys;
  ys.reserve(t_grid.size());
  for (double t : t_grid) ys.push_back(norm_fn(t));
  return fit_loglog(t_grid, ys);
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (count < 2 || !(lo > 0.0) || !(hi > lo))
    throw std::invalid_argument("log_spaced: invalid range");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return out;
}

double approx_error_bound(const GluingParams& gp) {
  const double err_l4 = radial_norm(error_profile(gp), WeightedNormSpec(4, 0, scale_invariant_delta(4)));
  const double curv_l8 = radial_norm(curvature_profile(gp), WeightedNormSpec(8, 0, scale_invariant_delta(8)));
  return err_l4 + std::pow(gp.t, 4.0 / 3.0) * curv_l8;
}

}  // namespace spin7
