#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spin7/index_formulas.hpp"

using namespace spin7;

TEST_CASE("index_u: rank terms and monomial transcription") {
  ChernData d;
  d.rank = 1;
  CHECK(index_u(d) == -1);
  d.rank = 2;
  CHECK(index_u(d) == -4);
  d.rank = 5;
  CHECK(index_u(d) == -25);
  CHECK(index_u(d, true) == -24);

  // pin each monomial coefficient with unit inputs (times 24 to stay integral)
  const auto probe = [](auto set_field) {
    ChernData unit;
    unit.rank = 1;
    set_field(unit);
    return index_u(unit) - (-1);  // remove the rank term
  };
  // -< -(p1/24)(-c1^2 + r(c1^2 - 2 c2)) + (r/12)(c1^4 - 4c1^2c2 + 2c2^2 + 4c1c3 - 4c4)
  //    - (1/12)c1^4 - c1c3 + c2^2 >  at r = 1:
  //   p1c1^2 term drops, p1c2 coefficient -1/12, c1^4 coefficient 0,
  //   c1^2c2 +1/3, c2^2 -(2/12 + 1) = -7/6, c1c3 +2/3, c4 +1/3
  CHECK(probe([](ChernData& c) { c.p1_c1sq = 24; }) == 0);
  CHECK(probe([](ChernData& c) { c.p1_c2 = 24; }) == -2);
  CHECK(probe([](ChernData& c) { c.c1_4 = 12; }) == 0);
  CHECK(probe([](ChernData& c) { c.c1sq_c2 = 12; }) == 4);
  CHECK(probe([](ChernData& c) { c.c2_sq = 12; }) == -14);
  CHECK(probe([](ChernData& c) { c.c1_c3 = 12; }) == 8);
  CHECK(probe([](ChernData& c) { c.c4 = 12; }) == 4);

  // non-integer result rejected
  ChernData bad;
  bad.rank = 1;
  bad.p1_c2 = 1;
  CHECK_THROWS_AS(index_u(bad), std::invalid_argument);
}

TEST_CASE("index_su2 examples and divisibility") {
  CHECK(index_su2(0, 0) == -3);
  CHECK(index_su2(-6, 0) == -2);
  CHECK(index_su2(4, 1) == -5);
  CHECK_THROWS_AS(index_su2(1, 0), std::invalid_argument);
}

TEST_CASE("index_u reduces to index_su2 on SU(2)-type data") {
  std::mt19937_64 rng(41u);
  std::uniform_int_distribution<long long> dist(-50, 50);
  int checked = 0;
  while (checked < 100) {
    const long long c2sq = dist(rng);
    long long p1c2 = dist(rng);
    p1c2 -= (p1c2 + 8 * c2sq) % 6;  // enforce divisibility
    ChernData d;
    d.rank = 2;
    d.c2_sq = c2sq;
    d.p1_c2 = p1c2;
    CHECK(index_u(d, true) == index_su2(p1c2, c2sq));
    ++checked;
  }
}

TEST_CASE("exceptional-divisor section counts") {
  CHECK(h0_exceptional(0) == 1);
  CHECK(h0_exceptional(-1) == 35);
  CHECK(h0_exceptional(1) == 0);
  CHECK(h0_exceptional(5) == 0);
}

TEST_CASE("h1/h3 values, recursion, duality") {
  CHECK(h1_delta(0) == 0);
  CHECK(h1_delta(-1) == 1);
  CHECK(h1_delta(-2) == 36);
  CHECK(h1_delta(1) == 0);
  CHECK(h3_delta(1) == 1);
  CHECK(h3_delta(0) == 0);
  CHECK(h3_delta(2) == 36);

  for (long long m = -10; m <= 0; ++m)
    CHECK(h1_delta(m - 1) == h1_delta(m) + h0_exceptional(m));
  for (long long m = -10; m <= 10; ++m)
    CHECK(h3_delta(m) == h1_delta(-m));
}

TEST_CASE("example virtual dimension") {
  CHECK(example_vdim(0, 0) == -3);
  CHECK(example_vdim(1, 0) == 33);
  CHECK(example_vdim(1, 1) == 69);
  CHECK(example_vdim(0, 1) == 33);

  for (long long k = 0; k <= 5; ++k) {
    for (long long l = 0; l <= 5; ++l) {
      const std::vector<long long> kx = {h1_delta(-2 * k).convert_to<long long>(),
                                         h1_delta(-2 * l).convert_to<long long>()};
      CHECK(example_vdim(k, l) == index_decomposition(0, 3, kx));
    }
  }
}

TEST_CASE("index decomposition arithmetic") {
  CHECK(index_decomposition(0, 3, {}) == -3);
  CHECK(index_decomposition(0, 0, {5}) == 5);
  CHECK(index_decomposition(0, 3, {36, 36}) == 69);
  CHECK_THROWS_AS(index_decomposition(-1, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(index_decomposition(0, 0, {-2}), std::invalid_argument);
}

TEST_CASE("chern data json") {
  ChernData d;
  d.rank = 2;
  d.p1_c2 = -6;
  d.c2_sq = 3;
  const ChernData back = chern_data_from_json(chern_data_to_json(d));
  CHECK(back.rank == 2);
  CHECK(back.p1_c2 == -6);
  CHECK(back.c2_sq == 3);
  CHECK(back.c1_4 == 0);
  CHECK_THROWS_AS(chern_data_from_json(nlohmann::json{{"rank", 2}, {"c5", 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(chern_data_from_json(nlohmann::json{{"c2_sq", 1}}), std::invalid_argument);
}
