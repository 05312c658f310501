#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spin7/kform.hpp"

namespace spin7 {
namespace lattice {

enum class Group { u1, su2 };

Group group_from_string(const std::string& s);
std::string to_string(Group g);
int algebra_dim(Group g);

// Periodic 8-dimensional grid carrying algebra-valued connection 1-forms.
struct LatticeSpec {
  int n = 2;              // sites per axis, 2..4
  double spacing = 1.0;
  Group group = Group::u1;

  LatticeSpec() = default;
  LatticeSpec(int n_, double spacing_, Group group_);

  long long sites() const;
  int field_size() const;  // sites * 8 * algebra_dim
};

// algebra-valued 1-form: values indexed by (site, direction, component);
// su(2) components refer to the basis (i sigma_1, i sigma_2, i sigma_3)
struct GaugeField {
  Eigen::VectorXd a;
};

GaugeField zero_field(const LatticeSpec& spec);
GaugeField random_field(const LatticeSpec& spec, std::uint64_t seed, double amplitude);

// algebra-valued 2-form: values indexed by (site, pair rank 0..27, component)
struct CurvatureField {
  Eigen::VectorXd f;
};

// F_{mu nu} = D_mu a_nu - D_nu a_mu + [a_mu, a_nu] with forward differences
// and periodic wrap
CurvatureField curvature(const LatticeSpec& spec, const GaugeField& a);

// sum over sites and components of |p7 F|^2
double energy(const LatticeSpec& spec, const GaugeField& a);

// exact gradient of `energy`
GaugeField gradient(const LatticeSpec& spec, const GaugeField& a);

// L2 norm of the discrete divergence sum_mu D*_mu a_mu
double gauge_fix_residual(const LatticeSpec& spec, const GaugeField& a);

struct SolveReport {
  int iterations = 0;
  std::vector<double> residual_history;  // sqrt(energy) per accepted step
  std::vector<double> energy_history;
  std::vector<double> ratio_history;     // successive-difference ratios
  bool converged = false;
  double final_residual = 0.0;
  double linear_solve_residual = 0.0;    // relative, Picard only
};

// Armijo backtracking descent on `energy`; stops when sqrt(energy) < tol
std::pair<GaugeField, SolveReport> gradient_descent(const LatticeSpec& spec, const GaugeField& a0,
                                                    int max_steps, double tol);

// Iteration solving L(a^{k+1}) = (0, -p7 F(a0) - p7(a^k ^ a^k)) in the
// least-squares sense, L the linearization at the background a0; returns
// a0 + limit.  Convergence: successive difference below tol.
std::pair<GaugeField, SolveReport> picard_iterate(const LatticeSpec& spec, const GaugeField& a0,
                                                  int k_max, double tol);

// Per-mode null spaces of p7 d for the abelian case; the direct sum over
// modes is the full solution space of pi7(dA) = 0.
class FourierOracleU1 {
 public:
  explicit FourierOracleU1(const LatticeSpec& spec);

  const std::vector<int>& null_dims() const { return null_dims_; }
  int total_null_dim() const;

  // l2 distance from `a` to its projection onto the solution space
  double membership_residual(const GaugeField& a) const;

  // real field built from one null-space mode vector (plus its conjugate)
  GaugeField mode_field(int mode_index, int null_column, double amplitude) const;

  int mode_count() const { return static_cast<int>(null_bases_.size()); }
  const std::array<int, 8>& wave_vector(int mode_index) const {
    return wave_vectors_[static_cast<std::size_t>(mode_index)];
  }
  // rank of the 28x8 mode matrix p7 D(k)
  int mode_rank(int mode_index) const {
    return 8 - null_dims_[static_cast<std::size_t>(mode_index)];
  }
  const Eigen::MatrixXcd& null_basis(int mode_index) const {
    return null_bases_[static_cast<std::size_t>(mode_index)];
  }
  Eigen::Matrix<std::complex<double>, 8, 1> symbol(int mode_index) const;

 private:
  LatticeSpec spec_;
  std::vector<std::array<int, 8>> wave_vectors_;
  std::vector<Eigen::MatrixXcd> null_bases_;  // orthonormal columns
  std::vector<int> null_dims_;
};

// relabel sites and directions by a signed permutation of the axes
GaugeField apply_axis_map(const LatticeSpec& spec, const LinearMap8& g, const GaugeField& a);

}  // namespace lattice
}  // namespace spin7
