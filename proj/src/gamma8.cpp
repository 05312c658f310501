#include "spin7/gamma8.hpp"

#include <stdexcept>

namespace spin7 {

Convention convention_from_string(const std::string& s) {
  if (s == "I" || s == "i" || s == "1") return Convention::I;
  if (s == "II" || s == "ii" || s == "2") return Convention::II;
  throw std::invalid_argument("convention must be 'I' or 'II'");
}

std::string to_string(Convention c) { return c == Convention::I ? "I" : "II"; }

namespace {

using Mat8 = Eigen::Matrix<double, 8, 8>;

// x' = M x for the coordinate action; entries written per complex pair
Mat8 mult_by_i_I() {
  Mat8 m = Mat8::Zero();
  for (int b = 0; b < 4; ++b) {
    m(2 * b, 2 * b + 1) = -1;  // x_{2b+1}' = -x_{2b+2}
    m(2 * b + 1, 2 * b) = 1;
  }
  return m;
}

// (z1,z2,z3,z4) -> (conj z2, -conj z1, conj z4, -conj z3) in convention I
Mat8 antilinear_I() {
  Mat8 m = Mat8::Zero();
  m(0, 2) = 1;  m(1, 3) = -1;   // z1' = conj z2
  m(2, 0) = -1; m(3, 1) = 1;    // z2' = -conj z1
  m(4, 6) = 1;  m(5, 7) = -1;   // z3' = conj z4
  m(6, 4) = -1; m(7, 5) = 1;    // z4' = -conj z3
  return m;
}

// w -> i w with w1 = -x1 + i x3, w2 = x2 + i x4, w3 = -x5 + i x7, w4 = x6 + i x8
Mat8 mult_by_i_II() {
  Mat8 m = Mat8::Zero();
  m(0, 2) = 1;  m(2, 0) = -1;   // w1' = i w1
  m(1, 3) = -1; m(3, 1) = 1;    // w2' = i w2
  m(4, 6) = 1;  m(6, 4) = -1;   // w3' = i w3
  m(5, 7) = -1; m(7, 5) = 1;    // w4' = i w4
  return m;
}

// (w1,w2,w3,w4) -> (conj w2, -conj w1, conj w4, -conj w3)
Mat8 antilinear_II() {
  Mat8 m = Mat8::Zero();
  m(0, 1) = -1; m(2, 3) = -1;   // w1' = conj w2
  m(1, 0) = 1;  m(3, 2) = 1;    // w2' = -conj w1
  m(4, 5) = -1; m(6, 7) = -1;   // w3' = conj w4
  m(5, 4) = 1;  m(7, 6) = 1;    // w4' = -conj w3
  return m;
}

}  // namespace

LinearMap8 gamma8_generator_alpha(Convention c) {
  return LinearMap8{c == Convention::I ? mult_by_i_I() : antilinear_II()};
}

LinearMap8 gamma8_generator_beta(Convention c) {
  return LinearMap8{c == Convention::I ? antilinear_I() : mult_by_i_II()};
}

std::vector<GroupElement> gamma8_elements(Convention c) {
  const Mat8 a = gamma8_generator_alpha(c).matrix;
  const Mat8 b = gamma8_generator_beta(c).matrix;
  std::vector<GroupElement> els;
  els.push_back({"e", LinearMap8{Mat8::Identity()}});
  const auto contains = [&els](const Mat8& m) {
    for (const auto& e : els)
      if ((e.map.matrix - m).lpNorm<Eigen::Infinity>() < 1e-9) return true;
    return false;
  };
  const std::vector<std::pair<std::string, Mat8>> gens = {{"a", a}, {"b", b}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (const auto& [gname, g] : gens) {
        const Mat8 prod = els[i].map.matrix * g;
        if (!contains(prod)) {
          const std::string base = els[i].name == "e" ? "" : els[i].name;
          els.push_back({base + gname, LinearMap8{prod}});
          grew = true;
        }
      }
    }
  }
  return els;
}

bool verify_spin7_membership(const GroupElement& g) {
  if (!g.map.is_orthogonal(1e-12)) return false;
  return approx_equal(pullback(g.map, cayley_form()), cayley_form(), 1e-12);
}

}  // namespace spin7
