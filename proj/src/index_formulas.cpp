#include "spin7/index_formulas.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace spin7 {

using Rational = boost::multiprecision::cpp_rational;

namespace {

Int to_integer(const Rational& q, const char* what) {
  if (denominator(q) != 1)
    throw std::invalid_argument(std::string("inconsistent characteristic numbers: ") + what +
                                " is not an integer");
  return numerator(q);
}

}  // namespace

Int index_u(const ChernData& d, bool su_bundle) {
  if (d.rank < 1) throw std::invalid_argument("index_u: rank must be >= 1");
  const Int r = d.rank;
  // bracket paired against [M]:
  //   -(p1/24)(-c1^2 + r (c1^2 - 2 c2))
  //   + (r/12)(c1^4 - 4 c1^2 c2 + 2 c2^2 + 4 c1 c3 - 4 c4)
  //   - (1/12) c1^4 - c1 c3 + c2^2
  const Rational bracket =
      Rational(-(-d.p1_c1sq + r * (d.p1_c1sq - 2 * d.p1_c2)), 24) +
      Rational(r * (d.c1_4 - 4 * d.c1sq_c2 + 2 * d.c2_sq + 4 * d.c1_c3 - 4 * d.c4), 12) -
      Rational(d.c1_4, 12) - Rational(d.c1_c3) + Rational(d.c2_sq);
  const Int lead = su_bundle ? r * r - 1 : r * r;
  return to_integer(Rational(-lead) - bracket, "index");
}

Int index_su2(const Int& p1_c2, const Int& c2_sq) {
  const Int s = p1_c2 + 8 * c2_sq;
  if (s % 6 != 0)
    throw std::invalid_argument(
        "inconsistent characteristic numbers: p1_c2 + 8 c2_sq not divisible by 6");
  return Int(-3) - s / 6;
}

Int h0_exceptional(long long m) {
  if (m > 0) return 0;
  const Int mm = m;
  const Int num = (3 - 4 * mm) * (2 - 4 * mm) * (1 - 4 * mm);
  return to_integer(Rational(num, 6), "h0");
}

Int h1_delta(long long m) {
  if (m > 0) return 0;
  const Int mm = m;
  return to_integer(Rational(mm * mm * (8 * mm * mm - 5), 3), "h1");
}

Int h3_delta(long long m) {
  if (m <= 0) return 0;
  const Int mm = m;
  return to_integer(Rational(mm * mm * (8 * mm * mm - 5), 3), "h3");
}

Int example_vdim(long long k, long long l) {
  const auto summand = [](long long m) {
    const Int mm = m;
    const Int val = to_integer(Rational(4 * mm * mm * (32 * mm * mm - 5), 3), "vdim summand");
    if (val != h1_delta(-2 * m))
      throw std::logic_error("example_vdim: summand disagrees with h1_delta(-2m)");
    return val;
  };
  return Int(-3) + summand(k) + summand(l);
}

Int index_decomposition(long long dim_KZ, long long dim_CZ, const std::vector<long long>& dim_KX) {
  if (dim_KZ < 0 || dim_CZ < 0)
    throw std::invalid_argument("index_decomposition: dimensions must be nonnegative");
  Int out = Int(dim_KZ) - Int(dim_CZ);
  for (long long d : dim_KX) {
    if (d < 0) throw std::invalid_argument("index_decomposition: dimensions must be nonnegative");
    out += d;
  }
  return out;
}

using nlohmann::json;

json chern_data_to_json(const ChernData& d) {
  const auto as_ll = [](const Int& v) { return v.convert_to<long long>(); };
  return json{{"rank", d.rank},         {"c1_4", as_ll(d.c1_4)},
              {"c1sq_c2", as_ll(d.c1sq_c2)}, {"c2_sq", as_ll(d.c2_sq)},
              {"c1_c3", as_ll(d.c1_c3)},     {"c4", as_ll(d.c4)},
              {"p1_c1sq", as_ll(d.p1_c1sq)}, {"p1_c2", as_ll(d.p1_c2)}};
}

ChernData chern_data_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("ChernData json: expected an object");
  static const std::vector<std::string> keys = {"rank",  "c1_4", "c1sq_c2", "c2_sq",
                                                "c1_c3", "c4",   "p1_c1sq", "p1_c2"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw std::invalid_argument("ChernData json: unknown key '" + key + "'");
  }
  ChernData d;
  const auto get = [&j](const char* key) -> Int {
    if (!j.contains(key)) return 0;
    if (!j.at(key).is_number_integer())
      throw std::invalid_argument(std::string("ChernData json: field '") + key +
                                  "' must be an integer");
    return j.at(key).get<long long>();
  };
  if (!j.contains("rank") || !j.at("rank").is_number_integer())
    throw std::invalid_argument("ChernData json: field 'rank' must be an integer");
  d.rank = j.at("rank").get<long long>();
  d.c1_4 = get("c1_4");
  d.c1sq_c2 = get("c1sq_c2");
  d.c2_sq = get("c2_sq");
  d.c1_c3 = get("c1_c3");
  d.c4 = get("c4");
  d.p1_c1sq = get("p1_c1sq");
  d.p1_c2 = get("p1_c2");
  return d;
}

}  // namespace spin7
