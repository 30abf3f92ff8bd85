#include <catch_amalgamated.hpp>

#include "powercount/counting.hpp"

using namespace powercount;

TEST_CASE("counts reproduce the worked examples") {
  CHECK(count_mstar_srim(5, 4, 1) == 6);   // the six quartic SRIM over F_5
  CHECK(count_mstar_srim(2, 12, 1) == 5);  // the five degree-12 SRIM over F_2
  CHECK(count_mstar_srim(5, 4, 2) == 3);
  CHECK(count_m_power(5, 1, 1) == 4);
  CHECK(count_m_power(5, 1, 2) == 2);  // squares in F_5^x
  CHECK(count_m_power(3, 2, 2) ==
        enumerate_count({3, 2, 2, 1, 0, CountFamily::NM}));
  CHECK(count_m_power(2, 3, 3) ==
        enumerate_count({2, 3, 3, 1, 0, CountFamily::NM}));
  CHECK(enumerate_count({5, 1, 4, 1, 0, CountFamily::NstarM}) == 6);
  CHECK(enumerate_count({2, 1, 12, 1, 0, CountFamily::NstarM}) == 5);
}

TEST_CASE("the printed N* display is not integral where the truth is 6") {
  Frac paper = count_closed_variant({5, 1, 4, 1, 0, CountFamily::NstarM}, FormulaVariant::Paper);
  CHECK(paper.num == 13);
  CHECK(paper.den == 2);
  Frac fixed = count_closed_variant({5, 1, 4, 1, 0, CountFamily::NstarM}, FormulaVariant::Fixed);
  CHECK(fixed == Frac(6));
}

TEST_CASE("degenerate family reductions") {
  // k = 1 reduces to the plain counts
  for (u64 q : {2ull, 3ull, 5ull})
    for (u32 M : {1u, 2u, 3u}) {
      if (M % q == 0) continue;
      for (u32 two_n = 2; two_n <= 8; two_n += 2)
        CHECK(count_degenerate_srim(q, two_n, 1, M) == count_mstar_srim(q, two_n, M));
      for (u32 n = 1; n <= 5; ++n)
        CHECK(count_degenerate(q, n, 1, M) == count_m_power(q, n, M));
    }
  // M = 1 with k > 1 gives zero: first powers generate only the small field
  CHECK(count_degenerate_srim(3, 12, 3, 1) == 0);
  CHECK(count_degenerate(3, 6, 3, 1) == 0);
  CHECK(count_degenerate(2, 4, 2, 1) == 0);
}

TEST_CASE("exponent partition identity") {
  // summing the per-exponent stratum sizes over all e recovers the SRIM count
  for (u64 q : {2ull, 3ull, 5ull}) {
    for (u32 two_n = 2; two_n <= 8; two_n += 2) {
      u32 n = two_n / 2;
      u64 total = 0;
      for (u64 e : divisors_u64(checked_pow_u64(q, n) + 1)) {
        if (e <= 2) continue;
        if (mult_order_mod(q % e, e) != two_n) continue;
        total += euler_phi_u64(e) / two_n;
      }
      CHECK(total == count_mstar_srim(q, two_n, 1));
    }
  }
}

TEST_CASE("monotonicity in M") {
  for (u64 q : {2ull, 3ull, 5ull})
    for (u32 two_k = 2; two_k <= 10; two_k += 2)
      for (u32 M : {2u, 3u, 4u, 5u}) {
        if (M % q == 0) continue;
        CHECK(count_mstar_srim(q, two_k, M) <= count_mstar_srim(q, two_k, 1));
      }
}

TEST_CASE("closed forms equal enumeration twins on a spot grid") {
  // the full acceptance grid runs in the acceptance suite; keep a fast slice
  for (u64 q : {2ull, 3ull}) {
    for (u32 M = 1; M <= 3; ++M) {
      if (M % q == 0) continue;
      for (u32 two_k = 2; two_k <= 8; two_k += 2)
        CHECK(count_mstar_srim(q, two_k, M) ==
              enumerate_count({q, M, two_k, 1, 0, CountFamily::NstarM}));
      for (u32 k = 1; k <= 5; ++k) {
        CHECK(count_m_power(q, k, M) == enumerate_count({q, M, k, 1, 0, CountFamily::NM}));
        CHECK(count_pairs(q, 2 * k, M) == enumerate_count({q, M, 2 * k, 1, 0, CountFamily::Rstar}));
      }
      for (u32 n = 2; n <= 6; n += 2)
        for (u32 k : {1u, 3u}) {
          if ((n / 2) % k != 0) continue;
          CHECK(count_degenerate_srim(q, n, k, M) ==
                enumerate_count({q, M, n, k, 0, CountFamily::NstarM_deg}));
        }
      for (u32 n = 1; n <= 6; ++n)
        for (u32 k = 1; k <= n; ++k) {
          if (n % k) continue;
          CHECK(count_degenerate(q, n, k, M) ==
                enumerate_count({q, M, n, k, 0, CountFamily::NM_deg}));
          CHECK(count_pairs_degenerate(q, 2 * n, k, M) ==
                enumerate_count({q, M, 2 * n, k, 0, CountFamily::Rstar_deg}));
        }
      for (u32 two_n = 2; two_n <= 6; two_n += 2)
        for (u64 e : divisors_u64(checked_pow_u64(q, two_n / 2) + 1))
          CHECK(count_srim_by_exponent(q, two_n, e, M) ==
                enumerate_count({q, M, two_n, 1, e, CountFamily::Nstar_e}));
      for (u32 n = 1; n <= 4; ++n)
        for (u64 e : divisors_u64(checked_pow_u64(q, n) - 1)) {
          CHECK(count_by_exponent(q, n, e, M) ==
                enumerate_count({q, M, n, 1, e, CountFamily::N_e}));
          CHECK(count_pairs_by_exponent(q, 2 * n, e, M) ==
                enumerate_count({q, M, 2 * n, 1, e, CountFamily::Rstar_e}));
        }
    }
  }
}

TEST_CASE("count preconditions") {
  CHECK_THROWS_AS(count_mstar_srim(5, 3, 1), ParamDomain);
  CHECK_THROWS_AS(count_mstar_srim(5, 4, 5), ParamDomain);
  CHECK_THROWS_AS(count_degenerate_srim(3, 12, 2, 2), ParamDomain);  // k must be odd
  CHECK_THROWS_AS(count_degenerate(3, 6, 4, 2), ParamDomain);        // k | n
  CHECK_THROWS_AS(enumerate_count({7, 1, 8, 1, 0, CountFamily::NM}), BoundExceeded);
}

TEST_CASE("Frac arithmetic") {
  CHECK(Frac(1, 2) + Frac(1, 3) == Frac(5, 6));
  CHECK(Frac(1, 2) * Frac(4, 3) == Frac(2, 3));
  CHECK(Frac(6, 2) == Frac(3));
  CHECK((Frac(1, 2) - Frac(1, 2)).num == 0);
  CHECK_FALSE(Frac(13, 2).integral());
}
