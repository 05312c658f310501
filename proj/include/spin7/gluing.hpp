#pragma once

#include <functional>
#include <vector>

namespace spin7 {

// Neck-scale parameters of the glued manifold model.
struct GluingParams {
  double t = 1e-3;
  double zeta = 1.0;

  GluingParams() = default;
  GluingParams(double t_, double zeta_ = 1.0);

  // 2 t^{4/5} <= t^{3/4}, the smallness needed by the 4-form interpolation
  bool interpolation_smallness_ok() const;
};

// edges {t, t^{5/6} zeta, t^{3/4} zeta, zeta, 1}
struct RadiusBands {
  double neck;
  double inner_overlap;
  double outer_overlap;
  double zeta;
  double outer;
};

RadiusBands radius_bands(const GluingParams& gp);

// chi^t(rho) = chi(log rho / log t); 1 for rho <= t^{5/6}, 0 for rho >= t^{3/4}
double cutoff_chi(const GluingParams& gp, double rho);
double cutoff_chi_drho(const GluingParams& gp, double rho);

// Piecewise nonnegative scalar profile of the radius on [t, 1].
struct RadialProfile {
  struct Piece {
    double lo, hi;
    std::function<double(double)> f;
  };
  std::vector<Piece> pieces;  // ordered, partitioning [lo, hi]

  double lo() const { return pieces.front().lo; }
  double hi() const { return pieces.back().hi; }
  double operator()(double rho) const;
};

// |pi7 F| model: t^6 rho^-8 + 1 on the open overlap band, 0 elsewhere
RadialProfile error_profile(const GluingParams& gp);
// |F| model: t^6 rho^-8 inside, t^6 rho^-8 + 1 on the band, 1 outside
RadialProfile curvature_profile(const GluingParams& gp);
// |d chi^t / d rho| as a profile
RadialProfile dchi_profile(const GluingParams& gp);

struct WeightedNormSpec {
  int p = 4;
  int derivative_count = 0;  // always 0 here
  double delta = 0.0;

  WeightedNormSpec() = default;
  WeightedNormSpec(int p_, int derivative_count_, double delta_);
};

// weight exponent that reproduces the plain L^p norm (int f^p rho^7 drho)^{1/p}
inline double scale_invariant_delta(int p) { return -8.0 / p; }

// ( int f(rho)^p rho^{-p delta} rho^{-8} rho^7 drho )^{1/p}
// by adaptive Gauss-Legendre on log-spaced panels, 1e-8 relative tolerance
double radial_norm(const RadialProfile& profile, const WeightedNormSpec& spec);

struct ScalingFit {
  double exponent = 0.0;
  double r_squared = 0.0;
};

// least-squares slope of log(y) against log(x)
ScalingFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

// slope of log(norm_fn(t)) vs log(t); grid must have >= 5 points spanning
// >= 2 decades
ScalingFit scaling_fit(const std::function<double(double)>& norm_fn,
                       const std::vector<double>& t_grid);

std::vector<double> log_spaced(double lo, double hi, int count);

// || pi7 F ||_{L^4} model plus t^{4/3} || F ||_{L^8}; scales as t^{1/3}
double approx_error_bound(const GluingParams& gp);

}  // namespace spin7
