#pragma once

// Truncated formal power series in u over exact rationals.  The truncation
// order is carried with the value; binary operations take the minimum of the
// operand orders and never silently extend.

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "intutil.hpp"

namespace powercount {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct RationalSeries {
  int order = 0;             // coefficients for u^0 .. u^order
  std::vector<Rat> coeffs;   // size order + 1

  RationalSeries() : order(0), coeffs(1, Rat(0)) {}
  explicit RationalSeries(int n) : order(n), coeffs(static_cast<size_t>(n) + 1, Rat(0)) {}

  static RationalSeries constant(const Rat& c, int n) {
    RationalSeries s(n);
    s.coeffs[0] = c;
    return s;
  }
  static RationalSeries one(int n) { return constant(Rat(1), n); }

  const Rat& at(int i) const { return coeffs[static_cast<size_t>(i)]; }
  Rat& at(int i) { return coeffs[static_cast<size_t>(i)]; }

  bool operator==(const RationalSeries& o) const {
    return order == o.order && coeffs == o.coeffs;
  }
};

inline RationalSeries series_truncate(const RationalSeries& a, int n) {
  RationalSeries r(n);
  for (int i = 0; i <= n && i <= a.order; ++i) r.at(i) = a.at(i);
  return r;
}

inline RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
  int n = std::min(a.order, b.order);
  RationalSeries r(n);
  for (int i = 0; i <= n; ++i) r.at(i) = a.at(i) + b.at(i);
  return r;
}

inline RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b) {
  int n = std::min(a.order, b.order);
  RationalSeries r(n);
  for (int i = 0; i <= n; ++i) r.at(i) = a.at(i) - b.at(i);
  return r;
}

inline RationalSeries series_scale(const RationalSeries& a, const Rat& c) {
  RationalSeries r = a;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

inline RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  int n = std::min(a.order, b.order);
  RationalSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.at(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.at(j) == 0) continue;
      r.at(i + j) += a.at(i) * b.at(j);
    }
  }
  return r;
}

inline RationalSeries series_inv(const RationalSeries& a) {
  if (a.at(0) == 0) throw NonUnitConstant("series inverse needs a(0) != 0");
  RationalSeries r(a.order);
  Rat c0inv = Rat(1) / a.at(0);
  r.at(0) = c0inv;
  for (int i = 1; i <= a.order; ++i) {
    Rat acc(0);
    for (int j = 1; j <= i && j <= a.order; ++j) acc += a.at(j) * r.at(i - j);
    r.at(i) = -acc * c0inv;
  }
  return r;
}

// a^e by binary exponentiation; exponents can be large counts.
inline RationalSeries series_ipow(const RationalSeries& a, u64 e) {
  RationalSeries r = RationalSeries::one(a.order);
  RationalSeries base = a;
  while (e) {
    if (e & 1) r = series_mul(r, base);
    base = series_mul(base, base);
    e >>= 1;
  }
  return r;
}

// u -> u^s, order preserved (overflowing terms dropped).
inline RationalSeries substitute_upow(const RationalSeries& a, u32 s) {
  if (s < 1) throw Error("substitute_upow: s >= 1 required");
  RationalSeries r(a.order);
  for (int i = 0; i <= a.order; ++i) {
    if (a.at(i) == 0) continue;
    u64 target = static_cast<u64>(i) * s;
    if (target > static_cast<u64>(a.order)) break;
    r.at(static_cast<int>(target)) = a.at(i);
  }
  return r;
}

// a(u) = even(u^2) + u * odd(u^2).
inline std::pair<RationalSeries, RationalSeries> parity_split(const RationalSeries& a) {
  RationalSeries even(a.order / 2), odd(a.order >= 1 ? (a.order - 1) / 2 : 0);
  for (int i = 0; i <= a.order; ++i) {
    if (i % 2 == 0)
      even.at(i / 2) = a.at(i);
    else
      odd.at((i - 1) / 2) = a.at(i);
  }
  return {even, odd};
}

// Product of terms^exponent; every term must have constant coefficient 1.
inline RationalSeries series_product_over(
    const std::vector<std::pair<RationalSeries, i64>>& terms, int order) {
  RationalSeries r = RationalSeries::one(order);
  for (const auto& [t, e] : terms) {
    if (t.at(0) != 1) throw NonUnitConstant("product_over term without unit constant");
    RationalSeries base = series_truncate(t, order);
    if (e >= 0)
      r = series_mul(r, series_ipow(base, static_cast<u64>(e)));
    else
      r = series_mul(r, series_ipow(series_inv(base), static_cast<u64>(-e)));
  }
  return r;
}

// 1 + sum_{m >= 1, s*m <= order} w(m) u^{s m}
inline RationalSeries series_one_plus(int order, u32 s,
                                      const std::function<Rat(u32)>& weight) {
  RationalSeries r = RationalSeries::one(order);
  for (u32 m = 1; static_cast<u64>(s) * m <= static_cast<u64>(order); ++m)
    r.at(static_cast<int>(s * m)) = weight(m);
  return r;
}

// 1/(1 - c u^s) truncated.
inline RationalSeries series_geometric(int order, u32 s, const Rat& c) {
  RationalSeries r = RationalSeries::one(order);
  Rat acc(1);
  for (u32 m = 1; static_cast<u64>(s) * m <= static_cast<u64>(order); ++m) {
    acc *= c;
    r.at(static_cast<int>(s * m)) = acc;
  }
  return r;
}

inline std::string rat_to_string(const Rat& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1)
    s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

inline std::string series_to_string(const RationalSeries& a) {
  std::string s;
  bool first = true;
  for (int i = 0; i <= a.order; ++i) {
    if (a.at(i) == 0) continue;
    if (!first) s += " + ";
    first = false;
    if (i == 0) {
      s += rat_to_string(a.at(i));
    } else {
      if (a.at(i) != 1) s += rat_to_string(a.at(i)) + " ";
      s += "u";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  if (first) s = "0";
  s += " + O(u^" + std::to_string(a.order + 1) + ")";
  return s;
}

}  // namespace powercount
