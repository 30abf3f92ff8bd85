#include <catch_amalgamated.hpp>

#include "powercount/gfq.hpp"

using namespace powercount;

TEST_CASE("field construction picks the deterministic modulus") {
  Field f4 = field_make(2, 2);
  CHECK(f4->q == 4);
  CHECK(f4->modulus == std::vector<u32>{1, 1, 1});  // x^2 + x + 1

  Field f9 = field_make(3, 2);
  CHECK(f9->modulus == std::vector<u32>{1, 0, 1});  // x^2 + 1

  // lexicographic rule compares coefficients low-to-high, so x^2+x+1 beats
  // x^2+2 over F_5
  Field f25 = field_make(5, 2);
  CHECK(f25->modulus == std::vector<u32>{1, 1, 1});

  // repeated calls return the identical context
  CHECK(field_make(3, 2)->modulus == f9->modulus);
  CHECK(field_make(3, 2).get() == f9.get());

  CHECK_THROWS_AS(field_make(6, 1), NonPrime);
  CHECK_THROWS_AS(field_make(2, 21), BoundExceeded);
}

TEST_CASE("element arithmetic") {
  Field f5 = field_make(5, 1);
  CHECK(elem_arith(f5, 2, f5, 3, ArithKind::Mul) == 1);
  Field f3 = field_make(3, 1);
  CHECK(elem_arith(f3, 2, f3, 2, ArithKind::Add) == 1);
  Field f4 = field_make(2, 2);
  u64 x = f4->from_repr({0, 1});
  CHECK(f4->mul(x, x) == f4->from_repr({1, 1}));  // x^2 = x + 1
  CHECK_THROWS_AS(f5->div(1, 0), DivByZero);
  CHECK_THROWS_AS(elem_arith(f5, 1, f3, 1, ArithKind::Add), CtxMismatch);
  CHECK(f5->div(1, 2) == 3);
}

TEST_CASE("multiplicative orders") {
  Field f5 = field_make(5, 1);
  CHECK(f5->mult_order(1) == 1);
  CHECK(f5->mult_order(2) == 4);
  CHECK(f5->mult_order(4) == 2);
  CHECK_THROWS_AS(f5->mult_order(0), ZeroElement);
}

TEST_CASE("Fermat property across whole small fields") {
  for (auto [p, a] : std::vector<std::pair<u32, u32>>{
           {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 2}, {3, 4}, {2, 10}, {2, 12}}) {
    Field k = field_make(p, a);
    REQUIRE(k->q <= (u64(1) << 12));
    for (u64 x = 1; x < k->q; ++x) {
      CHECK(k->pow(x, k->q - 1) == 1);
      CHECK((k->q - 1) % k->mult_order(x) == 0);
    }
  }
}

TEST_CASE("field axioms on sampled triples") {
  u64 state = 12345;
  auto rng = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (auto [p, a] : std::vector<std::pair<u32, u32>>{{5, 1}, {3, 3}, {2, 5}, {7, 2}}) {
    Field k = field_make(p, a);
    for (int i = 0; i < 200; ++i) {
      u64 x = rng() % k->q, y = rng() % k->q, z = rng() % k->q;
      CHECK(k->add(x, y) == k->add(y, x));
      CHECK(k->mul(x, y) == k->mul(y, x));
      CHECK(k->add(k->add(x, y), z) == k->add(x, k->add(y, z)));
      CHECK(k->mul(k->mul(x, y), z) == k->mul(x, k->mul(y, z)));
      CHECK(k->mul(x, k->add(y, z)) == k->add(k->mul(x, y), k->mul(x, z)));
      if (y) CHECK(k->mul(k->div(x, y), y) == x);
    }
  }
}

TEST_CASE("extension embedding respects the field structure") {
  Field f4 = field_make(2, 2);
  Field f16 = f4->extension(2);
  CHECK(f16->q == 16);
  CHECK(f4->embed(0, f16) == 0);
  CHECK(f4->embed(1, f16) == 1);
  for (u64 x = 0; x < 4; ++x)
    for (u64 y = 0; y < 4; ++y) {
      CHECK(f4->embed(f4->add(x, y), f16) == f16->add(f4->embed(x, f16), f4->embed(y, f16)));
      CHECK(f4->embed(f4->mul(x, y), f16) == f16->mul(f4->embed(x, f16), f4->embed(y, f16)));
    }
  Field f9 = field_make(3, 2);
  Field f81 = f9->extension(2);
  for (u64 x = 1; x < 9; ++x) {
    u64 ord_small = f9->mult_order(x);
    CHECK(f81->mult_order(f9->embed(x, f81)) == ord_small);
  }
}
