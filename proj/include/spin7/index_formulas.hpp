#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>
#include <vector>

namespace spin7 {

using Int = boost::multiprecision::cpp_int;

// Characteristic numbers of (M, E) paired against the fundamental class.
struct ChernData {
  long long rank = 1;
  Int c1_4 = 0;      // <c1(E)^4>
  Int c1sq_c2 = 0;   // <c1(E)^2 c2(E)>
  Int c2_sq = 0;     // <c2(E)^2>
  Int c1_c3 = 0;     // <c1(E) c3(E)>
  Int c4 = 0;        // <c4(E)>
  Int p1_c1sq = 0;   // <p1(M) c1(E)^2>
  Int p1_c2 = 0;     // <p1(M) c2(E)>
};

// Index of the linearized deformation operator for a U(r) bundle;
// `su_bundle` applies the su(E) rank correction r^2 -> r^2 - 1.
// Throws on a non-integer result ("inconsistent characteristic numbers").
Int index_u(const ChernData& d, bool su_bundle = false);

// SU(2) specialization: -3 - (p1_c2 + 8 c2_sq)/6; requires divisibility.
Int index_su2(const Int& p1_c2, const Int& c2_sq);

// dim H^0(P^3, O(-4m)) = (3-4m)(2-4m)(1-4m)/6 for m <= 0, else 0
Int h0_exceptional(long long m);

// (1/3) m^2 (8 m^2 - 5) for m <= 0, else 0
Int h1_delta(long long m);

// (1/3) m^2 (8 m^2 - 5) for m > 0, else 0; equals h1_delta(-m)
Int h3_delta(long long m);

// -3 + (4k^2/3)(32k^2-5) + (4l^2/3)(32l^2-5)
Int example_vdim(long long k, long long l);

// dim_KZ - dim_CZ + sum(dim_KX); all inputs nonnegative
Int index_decomposition(long long dim_KZ, long long dim_CZ, const std::vector<long long>& dim_KX);

nlohmann::json chern_data_to_json(const ChernData& d);
ChernData chern_data_from_json(const nlohmann::json& j);

}  // namespace spin7
