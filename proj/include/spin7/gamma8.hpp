#pragma once

#include <string>
#include <vector>

#include "spin7/kform.hpp"

namespace spin7 {

// The two complex-coordinate identifications of R^8:
//   I : z1 = x1 + i x2, z2 = x3 + i x4, z3 = x5 + i x6, z4 = x7 + i x8
//   II: w1 = -x1 + i x3, w2 = x2 + i x4, w3 = -x5 + i x7, w4 = x6 + i x8
enum class Convention { I, II };

Convention convention_from_string(const std::string& s);
std::string to_string(Convention c);

struct GroupElement {
  std::string name;
  LinearMap8 map;
};

// generator "a": multiplication by i in convention I coordinates
// (the anti-linear generator in convention II), and vice versa for "b"
LinearMap8 gamma8_generator_alpha(Convention c);
LinearMap8 gamma8_generator_beta(Convention c);

// the 8 distinct matrices generated by alpha and beta
std::vector<GroupElement> gamma8_elements(Convention c);

// true iff g preserves g0 (orthogonal) and pulls Omega0 back to itself,
// both to 1e-12
bool verify_spin7_membership(const GroupElement& g);

}  // namespace spin7
