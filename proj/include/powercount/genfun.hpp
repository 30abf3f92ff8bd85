#pragma once

// Assembly of the generating functions for M-power separable, semisimple,
// cyclic and regular classes/elements of Sp(2n,q) and O^eps(m,q), plus exact
// classical group orders, the special exponents o/e/r/h/h'/h'', admissible
// dimension tables for -1 blocks, and Wall centralizer orders.
//
// Conventions: a coefficient at u^n is the value for the rank-n group.  For
// orthogonal families the sum equation lives in a variable whose exponent is
// the dimension; O^0 series carry their O(1,q) value in the constant term.

#include <array>
#include <optional>

#include "counting.hpp"
#include "series.hpp"

namespace powercount {

enum class GroupKind { GL, U, Sp, Oplus, Ominus, Oodd };

inline BigInt bigint_pow(u64 base, u64 e) {
  BigInt b = base, r = 1;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline BigInt group_order(GroupKind kind, u32 m, u64 q) {
  if (m == 0) return 1;
  BigInt r;
  switch (kind) {
    case GroupKind::GL: {
      r = bigint_pow(q, static_cast<u64>(m) * (m - 1) / 2);
      for (u32 i = 1; i <= m; ++i) r *= bigint_pow(q, i) - 1;
      return r;
    }
    case GroupKind::U: {
      r = bigint_pow(q, static_cast<u64>(m) * (m - 1) / 2);
      for (u32 i = 1; i <= m; ++i) r *= bigint_pow(q, i) - ((i % 2) ? BigInt(-1) : BigInt(1));
      return r;
    }
    case GroupKind::Sp: {
      if (m % 2 != 0) throw ParamDomain("Sp needs even dimension");
      u32 n = m / 2;
      r = bigint_pow(q, static_cast<u64>(n) * n);
      for (u32 i = 1; i <= n; ++i) r *= bigint_pow(q, 2 * i) - 1;
      return r;
    }
    case GroupKind::Oplus:
    case GroupKind::Ominus: {
      if (m % 2 != 0) throw ParamDomain("O^+- needs even dimension");
      u32 n = m / 2;
      r = 2 * bigint_pow(q, static_cast<u64>(n) * (n - 1));
      r *= bigint_pow(q, n) - (kind == GroupKind::Oplus ? BigInt(1) : BigInt(-1));
      for (u32 i = 1; i + 1 <= n; ++i) r *= bigint_pow(q, 2 * i) - 1;
      return r;
    }
    case GroupKind::Oodd: {
      if (m % 2 != 1) throw ParamDomain("O^0 needs odd dimension");
      u32 n = (m - 1) / 2;
      r = bigint_pow(q, static_cast<u64>(n) * n);
      for (u32 i = 1; i <= n; ++i) r *= bigint_pow(q, 2 * i) - 1;
      if (q % 2 != 0) r *= 2;  // for even q the group is isomorphic to Sp(2n, q)
      return r;
    }
  }
  throw Error("unreachable");
}

// --- admissible dimensions of -1 blocks under the M-th power map -------------

// minus_one_table(q, M, maxdim)[d] = {realizable in O^+ of dim d,
//                                     realizable in O^-}, for even d >= 2;
// a dimension is symplectically admissible when either flag holds.  For odd M
// every even dimension is admissible with both types (-1 is its own root);
// for even M the M-th root is semisimple with primitive 2^{v+1} j-th
// eigenvalues (j | odd part of M), whose minimal polynomials are either SRIM
// (type contribution (-1)^multiplicity) or dual pairs (type +).
struct MinusOneTable {
  u32 maxdim;
  std::vector<std::array<bool, 2>> ok;  // [dim] -> {plus, minus}
  bool sp_ok(u32 dim) const { return ok[dim][0] || ok[dim][1]; }
};

inline MinusOneTable minus_one_table(u64 q, u32 M, u32 maxdim) {
  MinusOneTable t;
  t.maxdim = maxdim;
  t.ok.assign(maxdim + 1, {false, false});
  if (q % 2 == 0) throw OddCharRequired("-1 block analysis needs odd q");
  if (M % 2 == 1) {
    for (u32 d = 2; d <= maxdim; d += 2) t.ok[d] = {true, true};
    return t;
  }
  u32 v = v2_u64(M);
  u64 modd = M >> v;
  // reach[sign][dim]: sign index 0 = +, 1 = -
  std::vector<std::array<bool, 2>> reach(maxdim + 1, {false, false});
  reach[0][0] = true;
  for (u64 j : divisors_u64(modd)) {
    u64 tj = (u64(1) << (v + 1)) * j;
    u64 dj = mult_order_mod(q % tj, tj);
    bool sigma = (dj % 2 == 0) && (powmod_u64(q % tj, dj / 2, tj) == tj - 1);
    u64 step = sigma ? dj : 2 * dj;
    int unit_sign = sigma ? -1 : +1;  // type factor per added block
    if (step > maxdim) continue;
    for (u32 d = static_cast<u32>(step); d <= maxdim; ++d)
      for (int s = 0; s < 2; ++s) {
        int prev = (unit_sign == -1) ? 1 - s : s;
        if (reach[d - step][prev]) reach[d][s] = reach[d][s] || true;
      }
  }
  for (u32 d = 2; d <= maxdim; d += 2) t.ok[d] = {reach[d][0], reach[d][1]};
  return t;
}

struct SpecialExponents {
  u32 o = 2;    // t+-1 factor count in the separable orthogonal sum equation
  u32 e = 2;    // number of degree-one self-reciprocal polynomials (2 for odd q)
  u64 r = 1;    // rank step of admissible -1 blocks in Sp
  u32 h = 2;    // t-+1 factor count in the cyclic generating functions
  u32 hp = 2;   // regular orthogonal: h'
  u32 hpp = 0;  // regular orthogonal: h''
};

inline SpecialExponents special_exponents(u64 q, u32 M) {
  if (M < 1) throw ParamDomain("M >= 1 required");
  if (M % factor_u64(q)[0].first == 0) throw ParamDomain("gcd(M, q) = 1 required");
  SpecialExponents s;
  s.o = (M % 2 == 0) ? 1 : 2;
  s.e = (q % 2 == 0) ? 1 : 2;
  s.h = (M % 2 == 0) ? 1 : 2;
  s.hp = (M % 2 == 0) ? 1 : 2;
  s.hpp = (M == 2) ? 1 : 0;
  if (M % 2 == 1 || q % 2 == 0) {
    s.r = 1;
  } else {
    // smallest admissible dimension is at most 2^{v2(M)+1}
    u32 cap = static_cast<u32>(std::min<u64>(u64(1) << (v2_u64(M) + 2), u64(1) << 16));
    MinusOneTable t = minus_one_table(q, M, std::max<u32>(cap, 8));
    s.r = 0;
    for (u32 d = 2; d <= t.maxdim; d += 2)
      if (t.sp_ok(d)) {
        s.r = d / 2;
        break;
      }
    if (s.r == 0) throw Error("no admissible -1 dimension found");
  }
  return s;
}

// --- generating function requests --------------------------------------------

enum class GroupFamily { Sp, O };
enum class Statistic { Separable, Semisimple, Cyclic, Regular };
enum class Weighting { Classes, Probability };

struct GFRequest {
  GroupFamily family = GroupFamily::Sp;
  Statistic stat = Statistic::Separable;
  Weighting weight = Weighting::Probability;
  u64 q = 3;
  u32 M = 1;
  int order = 8;
};

struct OrthoTriple {
  RationalSeries plus, minus, zero;
  bool split = true;  // false: plus holds the combined O^+ + O^- series
};

namespace gfdetail {

inline Rat inv_big(const BigInt& b) { return Rat(BigInt(1), b); }

inline void check_request(const GFRequest& r) {
  if (r.M < 1) throw ParamDomain("M >= 1");
  if (r.M % factor_u64(r.q)[0].first == 0) throw ParamDomain("gcd(M, q) = 1 required");
  if (r.order < 0) throw ParamDomain("order >= 0");
  if (static_cast<double>(r.order) * std::log2(static_cast<double>(r.q)) >= 60)
    throw BoundExceeded("q^order out of range for stratum enumeration");
}

// Exponent strata of SRIM degree 2d (e | q^d + 1) and of dual pairs of
// degree d (e | q^d - 1), with the admissible-multiplicity test.
struct Stratum {
  u64 e;
  u64 count;
  IndicatorKey key;
};

inline std::vector<Stratum> srim_strata(u64 q, u32 M, u32 d) {
  std::vector<Stratum> out;
  for (u64 e : divisors_u64(checked_pow_u64(q, d) + 1)) {
    u64 c = count_srim_by_exponent(q, 2 * d, e, M);
    if (c > 0) out.push_back({e, c, IndicatorKey{q, M, 2 * d, e}});
  }
  return out;
}

inline std::vector<Stratum> pair_strata(u64 q, u32 M, u32 d) {
  std::vector<Stratum> out;
  for (u64 e : divisors_u64(checked_pow_u64(q, d) - 1)) {
    u64 c = count_pairs_by_exponent(q, 2 * d, e, M);
    if (c > 0) out.push_back({e, c, IndicatorKey{q, M, d, e}});
  }
  return out;
}

// Classical-series factors shared between the symplectic and orthogonal
// builders; all in the rank variable.
struct SpFactors {
  // (1 + w(d) u^d)^{count(d)} style products over d = 1..N
  static RationalSeries separable(const GFRequest& r, bool classes, bool minus_twist) {
    RationalSeries acc = RationalSeries::one(r.order);
    for (u32 d = 1; d <= static_cast<u32>(r.order); ++d) {
      u64 nstar = count_mstar_srim(r.q, 2 * d, r.M);
      u64 rstar = count_pairs(r.q, 2 * d, r.M);
      Rat wu = classes ? Rat(1) : inv_big(bigint_pow(r.q, d) + 1);
      Rat wg = classes ? Rat(1) : inv_big(bigint_pow(r.q, d) - 1);
      if (minus_twist) wu = -wu;
      RationalSeries tu = RationalSeries::one(r.order);
      tu.at(static_cast<int>(d)) = wu;
      RationalSeries tg = RationalSeries::one(r.order);
      tg.at(static_cast<int>(d)) = wg;
      acc = series_mul(acc, series_ipow(tu, nstar));
      acc = series_mul(acc, series_ipow(tg, rstar));
    }
    return acc;
  }

  // cyclic factors: 1 + w u^d / (1 - u^d/q^d), optionally with the type-1
  // alternating twist used by the orthogonal difference series.
  static RationalSeries cyclic(const GFRequest& r, bool minus_twist) {
    RationalSeries acc = RationalSeries::one(r.order);
    for (u32 d = 1; d <= static_cast<u32>(r.order); ++d) {
      u64 nstar = count_mstar_srim(r.q, 2 * d, r.M);
      u64 rstar = count_pairs(r.q, 2 * d, r.M);
      Rat cu = inv_big(bigint_pow(r.q, d) + 1);
      Rat cg = inv_big(bigint_pow(r.q, d) - 1);
      Rat qd = inv_big(bigint_pow(r.q, d));
      auto qd_pow = [&](u32 m) {
        Rat w(1);
        for (u32 i = 1; i < m; ++i) w *= qd;
        return w;
      };
      RationalSeries tu = series_one_plus(r.order, d, [&](u32 m) {
        Rat w = cu * qd_pow(m);
        return minus_twist ? ((m % 2) ? -w : w) : w;
      });
      RationalSeries tg = series_one_plus(r.order, d, [&](u32 m) { return cg * qd_pow(m); });
      acc = series_mul(acc, series_ipow(tu, nstar));
      acc = series_mul(acc, series_ipow(tg, rstar));
    }
    return acc;
  }

  static RationalSeries cyclic_classes(const GFRequest& r) {
    RationalSeries acc = RationalSeries::one(r.order);
    for (u32 d = 1; d <= static_cast<u32>(r.order); ++d) {
      u64 total = count_mstar_srim(r.q, 2 * d, r.M) + count_pairs(r.q, 2 * d, r.M);
      acc = series_mul(acc, series_ipow(series_geometric(r.order, d, Rat(1)), total));
    }
    return acc;
  }

  // semisimple block products over both the free strata (M*-power SRIM and
  // M-power pairs: all multiplicities) and the gated strata (admissible
  // multiplicities only).  Weights: classes -> 1, probability -> 1/|U|, 1/|GL|.
  static RationalSeries semisimple(const GFRequest& r, bool classes, bool minus_twist) {
    RationalSeries acc = RationalSeries::one(r.order);
    for (u32 d = 1; d <= static_cast<u32>(r.order); ++d) {
      u64 nstar = count_mstar_srim(r.q, 2 * d, r.M);
      u64 rstar = count_pairs(r.q, 2 * d, r.M);
      auto uw = [&](u32 m) -> Rat {
        Rat w = classes ? Rat(1) : inv_big(group_order(GroupKind::U, m, checked_pow_u64(r.q, d)));
        return (minus_twist && (m % 2)) ? -w : w;
      };
      auto gw = [&](u32 m) -> Rat {
        return classes ? Rat(1) : inv_big(group_order(GroupKind::GL, m, checked_pow_u64(r.q, d)));
      };
      acc = series_mul(acc, series_ipow(series_one_plus(r.order, d, uw), nstar));
      acc = series_mul(acc, series_ipow(series_one_plus(r.order, d, gw), rstar));
      for (const Stratum& s : srim_strata(r.q, r.M, d)) {
        RationalSeries t = series_one_plus(r.order, d, [&](u32 m) {
          return mult_admissible(s.key, m) ? uw(m) : Rat(0);
        });
        acc = series_mul(acc, series_ipow(t, s.count));
      }
      for (const Stratum& s : pair_strata(r.q, r.M, d)) {
        RationalSeries t = series_one_plus(r.order, d, [&](u32 m) {
          return mult_admissible(s.key, m) ? gw(m) : Rat(0);
        });
        acc = series_mul(acc, series_ipow(t, s.count));
      }
    }
    return acc;
  }
};

}  // namespace gfdetail

// --- symplectic generating functions -----------------------------------------

inline RationalSeries gf_sp(const GFRequest& r) {
  using namespace gfdetail;
  check_request(r);
  const bool classes = (r.weight == Weighting::Classes);
  const bool q_odd = (r.q % 2 != 0);
  Statistic stat = (r.stat == Statistic::Regular) ? Statistic::Cyclic : r.stat;

  if (stat == Statistic::Separable) {
    return SpFactors::separable(r, classes, false);
  }

  if (stat == Statistic::Cyclic) {
    // t -+ 1: single even Jordan blocks.  Odd q: two sign classes per block
    // size, centraliser 2 q^l.  Even q: the J_2 block is a single class with
    // centraliser q, larger blocks split into two classes with centraliser
    // 2 q^l, so the class count series is 2/(1-u) - 1 - u while the
    // probability weight stays q^{-l} in both characteristics.
    RationalSeries tfac(r.order);
    if (classes) {
      tfac = series_geometric(r.order, 1, Rat(1));
      tfac = series_sub(series_scale(tfac, Rat(2)), RationalSeries::one(r.order));
      if (!q_odd && r.order >= 1) tfac.at(1) = Rat(1);
      u32 h = q_odd ? ((r.M % 2) ? 2u : 1u) : 1u;
      RationalSeries base = tfac;
      for (u32 i = 1; i < h; ++i) tfac = series_mul(tfac, base);
      return series_mul(tfac, SpFactors::cyclic_classes(r));
    }
    tfac = series_geometric(r.order, 1, Rat(BigInt(1), BigInt(static_cast<long long>(r.q))));
    u32 h = q_odd ? ((r.M % 2) ? 2u : 1u) : 1u;
    RationalSeries base = tfac;
    for (u32 i = 1; i < h; ++i) tfac = series_mul(tfac, base);
    return series_mul(tfac, SpFactors::cyclic(r, false));
  }

  // Semisimple.
  RationalSeries t1(r.order), tm1 = RationalSeries::one(r.order);
  if (classes) {
    t1 = series_geometric(r.order, 1, Rat(1));
  } else {
    t1 = series_one_plus(r.order, 1,
                         [&](u32 m) { return inv_big(group_order(GroupKind::Sp, 2 * m, r.q)); });
  }
  if (q_odd) {
    MinusOneTable t = minus_one_table(r.q, r.M, 2 * static_cast<u32>(r.order));
    tm1 = RationalSeries::one(r.order);
    for (u32 dim = 2; dim <= t.maxdim; dim += 2) {
      if (!t.sp_ok(dim) || dim / 2 > static_cast<u32>(r.order)) continue;
      tm1.at(static_cast<int>(dim / 2)) =
          classes ? Rat(1) : inv_big(group_order(GroupKind::Sp, dim, r.q));
    }
  }
  RationalSeries acc = series_mul(t1, tm1);
  return series_mul(acc, SpFactors::semisimple(r, classes, false));
}

// --- orthogonal generating functions -----------------------------------------

namespace gfdetail {

// t - 1 / t + 1 block series in the dimension variable.
//   sum-side: even dims (1/|O+| + 1/|O-|) u^dim, odd dims u^dim / |Sp(dim-1)|
//   diff-side: even dims (1/|O+| - 1/|O-|) u^dim, odd dims cancel.
// For -1 blocks under even M only the admissible (dim, type) pairs count.
inline RationalSeries ortho_t_block(const GFRequest& r, int dim_order, bool minus_one,
                                    bool diff_side, bool classes) {
  RationalSeries s = RationalSeries::one(dim_order);
  const bool m_even = (r.M % 2 == 0);
  MinusOneTable adm =
      (minus_one && m_even) ? minus_one_table(r.q, r.M, static_cast<u32>(dim_order))
                            : MinusOneTable{};
  for (u32 dim = 1; dim <= static_cast<u32>(dim_order); ++dim) {
    if (dim % 2 == 0) {
      bool okp = true, okm = true;
      if (minus_one && m_even) {
        okp = adm.ok[dim][0];
        okm = adm.ok[dim][1];
      }
      Rat wp = classes ? Rat(1) : inv_big(group_order(GroupKind::Oplus, dim, r.q));
      Rat wm = classes ? Rat(1) : inv_big(group_order(GroupKind::Ominus, dim, r.q));
      Rat v(0);
      if (okp) v += wp;
      if (okm) v += diff_side ? -wm : wm;
      s.at(static_cast<int>(dim)) = v;
    } else {
      if (diff_side) continue;  // two discriminant classes with opposite type cancel
      if (minus_one && m_even) continue;  // odd-dimensional -1 blocks have no root
      // two discriminant forms, each weight 1/|O(dim,q)| = 1/(2|Sp(dim-1,q)|)
      s.at(static_cast<int>(dim)) =
          classes ? Rat(2) : inv_big(group_order(GroupKind::Sp, dim - 1, r.q));
      if (classes && r.q % 2 == 0) s.at(static_cast<int>(dim)) = Rat(1);
    }
  }
  return s;
}

// Regular t-block (q odd): odd-dim cyclic blocks (two classes, centraliser
// 2 q^l) plus even-dim nearly cyclic blocks; dim 2 holds the identity-like
// block with centraliser the full O^eps(2,q), higher even dims two classes
// per type with centraliser 4 q^m.
inline RationalSeries regular_t_block(const GFRequest& r, int dim_order, bool minus_one) {
  RationalSeries s = RationalSeries::one(dim_order);
  const bool m_even = (r.M % 2 == 0);
  MinusOneTable adm = (minus_one && m_even)
                          ? minus_one_table(r.q, r.M, std::max(2, dim_order))
                          : MinusOneTable{};
  for (u32 dim = 1; dim <= static_cast<u32>(dim_order); ++dim) {
    if (dim % 2 == 1) {
      if (minus_one && m_even) continue;  // cyclic -1-potent blocks need odd M
      u32 l = (dim - 1) / 2;
      s.at(static_cast<int>(dim)) = Rat(BigInt(1), bigint_pow(r.q, l));
    } else if (dim == 2) {
      bool okp = true, okm = true;
      if (minus_one && m_even) {
        okp = adm.ok[2][0];
        okm = adm.ok[2][1];
      }
      Rat v(0);
      if (okp) v += inv_big(group_order(GroupKind::Oplus, 2, r.q));
      if (okm) v += inv_big(group_order(GroupKind::Ominus, 2, r.q));
      s.at(2) = v;
    } else {
      if (minus_one && m_even) continue;  // (2l-1,1)-type -1 blocks need odd M
      s.at(static_cast<int>(dim)) = Rat(BigInt(1), bigint_pow(r.q, dim / 2));
    }
  }
  return s;
}

inline OrthoTriple solve_triple(const RationalSeries& sum_u, const RationalSeries* diff_v,
                                int order) {
  auto [even, odd] = parity_split(sum_u);
  RationalSeries pm = series_truncate(even, order);
  RationalSeries zero = series_scale(series_truncate(odd, order), Rat(1, 2));
  OrthoTriple t;
  t.zero = zero;
  if (diff_v) {
    RationalSeries d = series_truncate(*diff_v, order);
    t.plus = series_scale(series_add(pm, d), Rat(1, 2));
    t.minus = series_scale(series_sub(pm, d), Rat(1, 2));
    t.split = true;
  } else {
    t.plus = pm;
    t.minus = RationalSeries(order);
    t.split = false;
  }
  return t;
}

}  // namespace gfdetail

// Right-hand side of the sum equation, in the dimension variable (exponent =
// dimension, order 2N+1 so ranks up to N survive the parity split).
inline RationalSeries ortho_sum_rhs(const GFRequest& r) {
  using namespace gfdetail;
  check_request(r);
  const bool classes = (r.weight == Weighting::Classes);
  const bool q_odd = (r.q % 2 != 0);
  if (classes && r.stat != Statistic::Separable)
    throw ParamDomain("orthogonal class-count series exist for the separable statistic only");
  if (!q_odd && r.stat != Statistic::Separable)
    throw OddCharRequired("orthogonal semisimple/cyclic/regular series need odd q");
  const int dim_order = 2 * r.order + 1;

  if (r.stat == Statistic::Separable) {
    GFRequest sp_req = r;
    sp_req.family = GroupFamily::Sp;
    sp_req.order = dim_order;
    RationalSeries sum = substitute_upow(gf_sp(sp_req), 2);
    u32 o = (q_odd && r.M % 2 == 1) ? 2u : 1u;
    RationalSeries lin = RationalSeries::one(dim_order);
    lin.at(1) = classes ? (q_odd ? Rat(2) : Rat(1)) : Rat(1);
    for (u32 i = 0; i < o; ++i) sum = series_mul(sum, lin);
    return sum;
  }
  if (r.stat == Statistic::Semisimple) {
    GFRequest rr = r;
    rr.order = dim_order;
    RationalSeries y1 = substitute_upow(SpFactors::semisimple(rr, false, false), 2);
    RationalSeries sum = series_mul(ortho_t_block(r, dim_order, false, false, false),
                                    ortho_t_block(r, dim_order, true, false, false));
    return series_mul(sum, y1);
  }
  if (r.stat == Statistic::Cyclic) {
    GFRequest rr = r;
    rr.order = dim_order;
    RationalSeries z = substitute_upow(SpFactors::cyclic(rr, false), 2);
    // odd-dim single Jordan blocks for t-1 (always M-powers) and t+1 (odd M).
    RationalSeries tfac = RationalSeries::one(dim_order);
    for (u32 dim = 1; dim <= static_cast<u32>(dim_order); dim += 2)
      tfac.at(static_cast<int>(dim)) = Rat(BigInt(1), bigint_pow(r.q, (dim - 1) / 2));
    RationalSeries sum = series_mul(tfac, z);
    if (r.M % 2 == 1) sum = series_mul(sum, tfac);
    return sum;
  }
  // Regular: Sp-regular coincides with Sp-cyclic, so Z is the cyclic product.
  GFRequest rr = r;
  rr.order = dim_order;
  RationalSeries z = substitute_upow(SpFactors::cyclic(rr, false), 2);
  RationalSeries sum = series_mul(regular_t_block(r, dim_order, false), z);
  return series_mul(sum, regular_t_block(r, dim_order, true));
}

// Right-hand side of the difference equation in the rank variable, when the
// statistic has one (separable, semisimple, cyclic over odd q).
inline std::optional<RationalSeries> ortho_diff_rhs(const GFRequest& r) {
  using namespace gfdetail;
  check_request(r);
  const bool classes = (r.weight == Weighting::Classes);
  if (r.q % 2 == 0 || r.stat == Statistic::Regular) return std::nullopt;
  if (r.stat == Statistic::Separable) return SpFactors::separable(r, classes, true);
  const int dim_order = 2 * r.order + 1;
  if (r.stat == Statistic::Semisimple) {
    GFRequest rr = r;
    rr.order = dim_order;
    RationalSeries y2 = substitute_upow(SpFactors::semisimple(rr, false, true), 2);
    RationalSeries diff_u = series_mul(ortho_t_block(r, dim_order, false, true, false),
                                       ortho_t_block(r, dim_order, true, true, false));
    diff_u = series_mul(diff_u, y2);
    return parity_split(diff_u).first;
  }
  // Cyclic
  GFRequest rr = r;
  rr.order = dim_order;
  RationalSeries zp = substitute_upow(SpFactors::cyclic(rr, true), 2);
  return parity_split(zp).first;
}

inline OrthoTriple gf_ortho(const GFRequest& r) {
  using namespace gfdetail;
  RationalSeries sum = ortho_sum_rhs(r);
  auto diff = ortho_diff_rhs(r);
  return solve_triple(sum, diff ? &*diff : nullptr, r.order);
}

// --- Wall centralizer orders --------------------------------------------------

struct WallPart {
  u32 part = 1;
  u32 mult = 1;
  int sign = 0;  // -1, +1, or 0 when no sign is attached
};

struct WallEntry {
  Poly phi;
  std::vector<WallPart> partition;  // distinct parts
};

// Centralizer order per Wall: prod_phi B(phi) with
//   B(phi) = Q^{sum_{mu<nu} mu m_mu m_nu + (1/2) sum (mu-1) m_mu^2} prod A(phi^mu)
// where Q = q^{deg phi}.  q-exponents are accumulated in half units.
inline BigInt centralizer_order_from_data(const std::vector<WallEntry>& datum,
                                          GroupFamily ambient, u64 q) {
  bool q_odd = (q % 2 != 0);
  i64 half_q_exp = 0;
  Rat acc(1);
  auto is_t_pm1 = [&](const Poly& f) {
    if (f.degree() != 1) return false;
    u64 c = f.c[0];
    return c == 1 || c == f.k->neg(1);
  };
  // validate dual pairing
  for (const auto& en : datum) {
    Poly dual = reciprocal_dual(en.phi);
    if (dual == en.phi) continue;
    bool found = false;
    for (const auto& other : datum)
      if (other.phi == dual) {
        if (other.partition.size() != en.partition.size()) throw InvalidDatum("pair mismatch");
        for (size_t i = 0; i < en.partition.size(); ++i)
          if (other.partition[i].part != en.partition[i].part ||
              other.partition[i].mult != en.partition[i].mult)
            throw InvalidDatum("lambda_{phi*} != lambda_phi");
        found = true;
      }
    if (!found) throw InvalidDatum("dual partner missing");
  }
  for (const auto& en : datum) {
    u32 deg = static_cast<u32>(en.phi.degree());
    bool tpm = is_t_pm1(en.phi);
    bool self_dual = (en.phi == reciprocal_dual(en.phi));
    // partition shape checks for t +- 1
    if (tpm && q_odd) {
      for (const auto& p : en.partition) {
        bool odd_part = (p.part % 2 == 1);
        if (ambient == GroupFamily::Sp && odd_part && p.mult % 2 != 0)
          throw InvalidDatum("symplectic: odd parts need even multiplicity");
        if (ambient == GroupFamily::O && !odd_part && p.mult % 2 != 0)
          throw InvalidDatum("orthogonal: even parts need even multiplicity");
      }
    }
    // B exponent: 2E = 2 sum_{mu<nu} mu m_mu m_nu + sum (mu-1) m_mu^2, in half units of Q
    i64 twoE = 0;
    for (size_t i = 0; i < en.partition.size(); ++i) {
      const auto& pi = en.partition[i];
      twoE += static_cast<i64>(pi.part - 1) * pi.mult * pi.mult;
      for (size_t j = 0; j < en.partition.size(); ++j) {
        if (en.partition[j].part < pi.part)
          twoE += 2ll * en.partition[j].part * pi.mult * en.partition[j].mult;
      }
    }
    half_q_exp += twoE * deg;
    for (const auto& p : en.partition) {
      u32 m = p.mult;
      if (!tpm) {
        if (self_dual) {
          acc *= Rat(group_order(GroupKind::U, m, checked_pow_u64(q, deg / 2)));
        } else {
          // |GL(m, q^deg)|^{1/2} per entry; the dual partner supplies the
          // other half, so take the square root jointly via a half-exponent
          // trick: multiply once for the lexicographically smaller of the pair.
          Poly dual = reciprocal_dual(en.phi);
          if (en.phi < dual) acc *= Rat(group_order(GroupKind::GL, m, checked_pow_u64(q, deg)));
        }
      } else if (ambient == GroupFamily::Sp) {
        if (p.part % 2 == 1) {
          acc *= Rat(group_order(GroupKind::Sp, m, q));
        } else {
          half_q_exp += m;  // q^{m/2}
          GroupKind kind = (m % 2 == 1) ? GroupKind::Oodd
                                        : (p.sign >= 0 ? GroupKind::Oplus : GroupKind::Ominus);
          acc *= Rat(group_order(kind, m, q));
        }
      } else {
        if (p.part % 2 == 1) {
          GroupKind kind = (m % 2 == 1) ? GroupKind::Oodd
                                        : (p.sign >= 0 ? GroupKind::Oplus : GroupKind::Ominus);
          acc *= Rat(group_order(kind, m, q));
        } else {
          half_q_exp -= m;  // q^{-m/2}
          acc *= Rat(group_order(GroupKind::Sp, m, q));
        }
      }
    }
  }
  if (half_q_exp % 2 != 0) throw InvalidDatum("non-integral q exponent");
  if (half_q_exp >= 0)
    acc *= Rat(bigint_pow(q, static_cast<u64>(half_q_exp / 2)));
  else
    acc /= Rat(bigint_pow(q, static_cast<u64>(-half_q_exp / 2)));
  if (boost::multiprecision::denominator(acc) != 1) throw InvalidDatum("non-integral centralizer");
  return boost::multiprecision::numerator(acc);
}

}  // namespace powercount
