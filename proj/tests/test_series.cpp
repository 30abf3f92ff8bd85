#include <catch_amalgamated.hpp>

#include "powercount/series.hpp"

using namespace powercount;

namespace {
RationalSeries from_ints(std::vector<long> v) {
  RationalSeries s(static_cast<int>(v.size()) - 1);
  for (size_t i = 0; i < v.size(); ++i) s.at(static_cast<int>(i)) = Rat(v[i]);
  return s;
}
}

TEST_CASE("geometric inverse") {
  RationalSeries one_minus_u = from_ints({1, -1, 0, 0, 0, 0});
  RationalSeries inv = series_inv(one_minus_u);
  for (int i = 0; i <= inv.order; ++i) CHECK(inv.at(i) == 1);
  CHECK_THROWS_AS(series_inv(from_ints({0, 1})), NonUnitConstant);
}

TEST_CASE("powers and binomials") {
  RationalSeries one_plus_u = from_ints({1, 1, 0, 0});
  CHECK(series_ipow(one_plus_u, 2) == from_ints({1, 2, 1, 0}));
  RationalSeries p5 = series_ipow(series_truncate(one_plus_u, 3), 5);
  CHECK(p5.at(0) == 1);
  CHECK(p5.at(1) == 5);
  CHECK(p5.at(2) == 10);
  CHECK(p5.at(3) == 10);
}

TEST_CASE("substitution") {
  CHECK(substitute_upow(from_ints({1, 1, 0, 0}), 2) == from_ints({1, 0, 1, 0}));
  CHECK(substitute_upow(from_ints({0, 1, 0, 0}), 3) == from_ints({0, 0, 0, 1}));
  RationalSeries geo = series_geometric(6, 1, Rat(1));
  RationalSeries g2 = substitute_upow(geo, 2);
  for (int i = 0; i <= 6; ++i) CHECK(g2.at(i) == (i % 2 == 0 ? 1 : 0));
}

TEST_CASE("parity split and reassembly") {
  auto [e1, o1] = parity_split(from_ints({1, 1, 1}));
  CHECK(e1 == from_ints({1, 1}));
  CHECK(o1 == from_ints({1}));
  auto [e2, o2] = parity_split(from_ints({0, 1}));
  CHECK(e2.at(0) == 0);
  CHECK(o2.at(0) == 1);

  // reassembly: a(u) = even(u^2) + u odd(u^2)
  u64 state = 77;
  auto rng = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int rep = 0; rep < 20; ++rep) {
    RationalSeries a(9);
    for (int i = 0; i <= 9; ++i) a.at(i) = Rat(static_cast<long>(rng() % 19) - 9, 1 + (rng() % 5));
    auto [ev, od] = parity_split(a);
    for (int i = 0; i <= a.order; ++i) {
      Rat expect = (i % 2 == 0) ? ev.at(i / 2) : od.at((i - 1) / 2);
      CHECK(a.at(i) == expect);
    }
  }
}

TEST_CASE("product over term lists") {
  CHECK(series_product_over({}, 4) == RationalSeries::one(4));
  RationalSeries one_plus_u = from_ints({1, 1, 0, 0, 0});
  CHECK(series_product_over({{one_plus_u, 2}}, 4).at(2) == 1);
  // 1/((1-u)(1-u^2)): partition-like coefficients 1 1 2 2 3
  RationalSeries r = series_product_over(
      {{from_ints({1, -1, 0, 0, 0}), -1}, {from_ints({1, 0, -1, 0, 0}), -1}}, 4);
  CHECK(r == from_ints({1, 1, 2, 2, 3}));
  // invariance under permutation of terms
  RationalSeries r2 = series_product_over(
      {{from_ints({1, 0, -1, 0, 0}), -1}, {from_ints({1, -1, 0, 0, 0}), -1}}, 4);
  CHECK(r == r2);
  CHECK_THROWS_AS(series_product_over({{from_ints({0, 1}), 1}}, 1), NonUnitConstant);
}

TEST_CASE("ring axioms on sampled triples to order 16") {
  u64 state = 4242;
  auto rng = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  auto random_series = [&](bool unit) {
    RationalSeries s(16);
    for (int i = 0; i <= 16; ++i)
      s.at(i) = Rat(static_cast<long>(rng() % 21) - 10, 1 + (rng() % 7));
    if (unit) s.at(0) = 1;
    return s;
  };
  for (int rep = 0; rep < 10; ++rep) {
    RationalSeries a = random_series(false), b = random_series(false), c = random_series(false);
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    CHECK(series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c)));
    RationalSeries u = random_series(true);
    CHECK(series_mul(u, series_inv(u)) == RationalSeries::one(16));
    CHECK(series_mul(series_inv(u), u) == RationalSeries::one(16));
  }
}

TEST_CASE("rendering") {
  RationalSeries s(2);
  s.at(0) = 1;
  s.at(1) = Rat(3, 8);
  CHECK(series_to_string(s) == "1 + 3/8 u + O(u^3)");
}
