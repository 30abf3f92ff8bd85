#pragma once

// Monic polynomial arithmetic over F_q: multiplication, division, gcd,
// composition with x^s, reciprocal duals, irreducibility (Rabin), complete
// factorization (squarefree split + distinct-degree + Cantor-Zassenhaus with
// a fixed-seed generator so factor order is reproducible), Milnor typing,
// exponents, and direct enumeration of self-reciprocal irreducibles.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gfq.hpp"

namespace powercount {

struct Poly {
  Field k;
  std::vector<u64> c;  // low-first, no trailing zeros; empty = zero

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  u64 coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
  u64 constant_term() const { return coeff(0); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const Poly& o) const { return k->same(*o.k) && c == o.c; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Order by (degree, coefficients low-to-high); the canonical output order.
  bool operator<(const Poly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
  }
};

using MonicPoly = Poly;

inline Poly poly_from(const Field& k, std::vector<u64> coeffs) {
  for (auto& x : coeffs)
    if (x >= k->q) throw Error("coefficient out of range");
  Poly f{k, std::move(coeffs)};
  f.trim();
  return f;
}

inline Poly poly_zero(const Field& k) { return Poly{k, {}}; }
inline Poly poly_one(const Field& k) { return Poly{k, {1}}; }
inline Poly poly_x(const Field& k) { return Poly{k, {0, 1}}; }

// x^n + c_extra convenience used by tests: x^n - 1 etc.
inline Poly poly_xn_minus_1(const Field& k, u32 n) {
  std::vector<u64> c(n + 1, 0);
  c[0] = k->neg(1);
  c[n] = 1;
  return Poly{k, std::move(c)};
}

inline void check_same_field(const Poly& f, const Poly& g) {
  if (!f.k->same(*g.k)) throw CtxMismatch("polynomials over different fields");
}

inline Poly poly_add(const Poly& f, const Poly& g) {
  check_same_field(f, g);
  Poly r{f.k, {}};
  r.c.resize(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.k->add(f.coeff(i), g.coeff(i));
  r.trim();
  return r;
}

inline Poly poly_sub(const Poly& f, const Poly& g) {
  check_same_field(f, g);
  Poly r{f.k, {}};
  r.c.resize(std::max(f.c.size(), g.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.k->sub(f.coeff(i), g.coeff(i));
  r.trim();
  return r;
}

inline Poly poly_scale(const Poly& f, u64 s) {
  Poly r = f;
  for (auto& x : r.c) x = f.k->mul(x, s);
  r.trim();
  return r;
}

inline Poly poly_mul(const Poly& f, const Poly& g) {
  check_same_field(f, g);
  if (f.is_zero() || g.is_zero()) return poly_zero(f.k);
  Poly r{f.k, std::vector<u64>(f.c.size() + g.c.size() - 1, 0)};
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (!f.c[i]) continue;
    for (size_t j = 0; j < g.c.size(); ++j)
      if (g.c[j]) r.c[i + j] = f.k->add(r.c[i + j], f.k->mul(f.c[i], g.c[j]));
  }
  r.trim();
  return r;
}

inline std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
  check_same_field(f, g);
  if (g.is_zero()) throw DivByZero("polynomial division by zero");
  if (g.degree() == 0) {
    u64 inv = f.k->inv(g.c[0]);
    return {poly_scale(f, inv), poly_zero(f.k)};
  }
  Poly rem = f;
  Poly quot{f.k, {}};
  if (rem.degree() >= g.degree()) quot.c.resize(rem.degree() - g.degree() + 1, 0);
  u64 lead_inv = f.k->inv(g.c.back());
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    size_t shift = rem.degree() - g.degree();
    u64 factor = f.k->mul(rem.c.back(), lead_inv);
    quot.c[shift] = factor;
    for (size_t i = 0; i < g.c.size(); ++i)
      rem.c[shift + i] = f.k->sub(rem.c[shift + i], f.k->mul(factor, g.c[i]));
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

inline Poly poly_mod(const Poly& f, const Poly& g) {
  if (g.degree() < 1) throw ModByConstant("mod by constant polynomial");
  return poly_divmod(f, g).second;
}

inline Poly poly_div(const Poly& f, const Poly& g) { return poly_divmod(f, g).first; }

inline Poly make_monic(const Poly& f) {
  if (f.is_zero()) return f;
  if (f.c.back() == 1) return f;
  return poly_scale(f, f.k->inv(f.c.back()));
}

inline Poly poly_gcd(Poly a, Poly b) {
  check_same_field(a, b);
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// f(x^s)
inline Poly compose_power(const Poly& f, u32 s) {
  if (s == 0) throw Error("compose_power: s >= 1 required");
  if (f.is_zero()) return f;
  Poly r{f.k, std::vector<u64>(static_cast<size_t>(f.degree()) * s + 1, 0)};
  for (size_t i = 0; i < f.c.size(); ++i) r.c[i * s] = f.c[i];
  r.trim();
  return r;
}

inline u64 poly_eval(const Poly& f, u64 x) {
  u64 r = 0;
  for (size_t i = f.c.size(); i-- > 0;) r = f.k->add(f.k->mul(r, x), f.c[i]);
  return r;
}

inline Poly poly_derivative(const Poly& f) {
  Poly r{f.k, {}};
  if (f.c.size() <= 1) return r;
  r.c.resize(f.c.size() - 1, 0);
  for (size_t i = 1; i < f.c.size(); ++i) r.c[i - 1] = f.k->mul(f.c[i], i % f.k->p);
  r.trim();
  return r;
}

enum class PolyOp { Mul, Mod, Gcd, ComposePower };

inline Poly poly_arith(const Poly& f, const Poly& g, PolyOp op, u32 s = 1) {
  switch (op) {
    case PolyOp::Mul:
      return poly_mul(f, g);
    case PolyOp::Mod:
      return poly_mod(f, g);
    case PolyOp::Gcd:
      return poly_gcd(f, g);
    case PolyOp::ComposePower:
      return compose_power(f, s);
  }
  throw Error("unreachable");
}

// f*(x) = f(0)^{-1} x^deg(f) f(1/x); roots are the inverses of the roots of f.
inline Poly reciprocal_dual(const Poly& f) {
  if (f.is_zero() || f.c[0] == 0) throw ZeroConstantTerm("dual needs f(0) != 0");
  Poly r{f.k, std::vector<u64>(f.c.rbegin(), f.c.rend())};
  return poly_scale(r, f.k->inv(f.c[0]));
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) {
  return poly_mod(poly_mul(a, b), m);
}

inline Poly poly_powmod(Poly base, u64 e, const Poly& m) {
  Poly r = poly_one(base.k);
  base = poly_mod(base, m);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m);
    base = poly_mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// x^{q^j} mod m, computed by iterating the Frobenius.
inline Poly frobenius_power_x(const Poly& m, u32 j) {
  Poly r = poly_x(m.k);
  for (u32 i = 0; i < j; ++i) r = poly_powmod(r, m.k->q, m);
  return r;
}

inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw ConstantInput("irreducibility of a constant");
  Poly g = make_monic(f);
  u32 n = static_cast<u32>(g.degree());
  if (n == 1) return true;
  if (g.c[0] == 0) return false;  // x divides
  // No irreducible factor of degree <= n/2 means irreducible; walk the
  // Frobenius chain with an early exit at the first common factor.
  Poly h = poly_x(g.k);
  for (u32 d = 1; 2 * d <= n; ++d) {
    h = poly_powmod(h, g.k->q, g);
    Poly common = poly_gcd(poly_sub(h, poly_x(g.k)), g);
    if (common.degree() != 0) return false;
  }
  return true;
}

struct Factorization {
  std::vector<std::pair<Poly, u32>> factors;  // (irreducible monic, multiplicity)
  u64 unit = 1;

  Poly expand(const Field& k) const {
    Poly r = poly_from(k, {unit});
    for (const auto& [f, m] : factors)
      for (u32 i = 0; i < m; ++i) r = poly_mul(r, f);
    return r;
  }
};

namespace detail {

struct SplitRng {
  u64 s;
  explicit SplitRng(u64 seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  u64 next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  Poly random_poly(const Field& k, u32 deg_below) {
    std::vector<u64> c(deg_below, 0);
    for (auto& x : c) x = next() % k->q;
    Poly r{k, std::move(c)};
    r.trim();
    return r;
  }
};

// r^{(q^d - 1)/2} mod m without big integers: (q-1)/2 * (1 + q + ... + q^{d-1}).
inline Poly half_torus_power(const Poly& r, u32 d, const Poly& m) {
  const Field& k = m.k;
  Poly base = poly_powmod(r, (k->q - 1) / 2, m);
  Poly acc = base;  // base^{q^0}
  Poly out = base;
  for (u32 i = 1; i < d; ++i) {
    acc = poly_powmod(acc, k->q, m);
    out = poly_mulmod(out, acc, m);
  }
  return out;
}

// Absolute trace to F_2 of r in F_{q^d}[x]/(m)-land, q = 2^a.
inline Poly trace_poly(const Poly& r, u32 d, const Poly& m) {
  const Field& k = m.k;
  u32 bits = k->a * d;
  Poly acc = poly_mod(r, m);
  Poly out = acc;
  for (u32 i = 1; i < bits; ++i) {
    acc = poly_mulmod(acc, acc, m);
    out = poly_add(out, acc);
  }
  return out;
}

inline void equal_degree_split(const Poly& h, u32 d, SplitRng& rng, std::vector<Poly>& out) {
  if (static_cast<u32>(h.degree()) == d) {
    out.push_back(h);
    return;
  }
  const Field& k = h.k;
  while (true) {
    Poly r = rng.random_poly(k, static_cast<u32>(h.degree()));
    if (r.degree() < 1) continue;
    Poly g = poly_gcd(r, h);
    if (g.degree() == 0) {
      Poly s = (k->p == 2) ? trace_poly(r, d, h)
                           : poly_sub(half_torus_power(r, d, h), poly_one(k));
      g = poly_gcd(s, h);
    }
    if (g.degree() > 0 && g.degree() < h.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(poly_div(h, g), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Distinct-degree decomposition of a squarefree monic f: list of
// (d, product of all irreducible factors of degree d), d ascending.
inline std::vector<std::pair<u32, Poly>> distinct_degree_parts(const Poly& f) {
  std::vector<std::pair<u32, Poly>> parts;
  Poly rem = make_monic(f);
  Poly h = poly_x(f.k);  // x^{q^i} mod rem
  u32 d = 0;
  while (rem.degree() > 0) {
    ++d;
    if (2 * d > static_cast<u32>(rem.degree())) {
      parts.push_back({static_cast<u32>(rem.degree()), rem});
      break;
    }
    h = poly_powmod(h, f.k->q, rem);
    Poly g = poly_gcd(poly_sub(h, poly_x(f.k)), rem);
    if (g.degree() > 0) {
      parts.push_back({d, g});
      rem = poly_div(rem, g);
      if (rem.degree() == 0) break;
      h = poly_mod(h, rem);
    }
  }
  return parts;
}

inline constexpr u64 kFactorSeedDefault = 0x5eedu;

inline Factorization factorize(const Poly& input, u64 seed = kFactorSeedDefault) {
  if (input.degree() < 1) throw ConstantInput("factorize needs degree >= 1");
  const Field& k = input.k;
  Factorization out;
  Poly f = input;
  out.unit = f.c.back();
  f = make_monic(f);

  // Peel x^m.
  u32 xmult = 0;
  while (f.c[0] == 0) {
    f.c.erase(f.c.begin());
    ++xmult;
  }
  if (xmult) out.factors.push_back({poly_x(k), xmult});

  // Squarefree decomposition adapted to characteristic p, then DDF + EDF.
  detail::SplitRng rng(seed);
  struct Task {
    Poly g;
    u32 mult;
  };
  std::vector<Task> tasks{{f, 1}};
  while (!tasks.empty()) {
    Task t = tasks.back();
    tasks.pop_back();
    if (t.g.degree() < 1) continue;
    Poly d = poly_derivative(t.g);
    if (d.is_zero()) {
      // g = h(x^p): take p-th root coefficientwise (c -> c^{q/p}).
      std::vector<u64> root;
      for (size_t i = 0; i < t.g.c.size(); i += k->p)
        root.push_back(k->pow(t.g.c[i], k->q / k->p));
      tasks.push_back({Poly{k, std::move(root)}, t.mult * k->p});
      continue;
    }
    Poly sqf = poly_div(t.g, poly_gcd(t.g, d));  // squarefree part
    if (sqf.degree() < t.g.degree()) tasks.push_back({poly_div(t.g, sqf), t.mult});
    for (auto& [deg, part] : distinct_degree_parts(sqf)) {
      std::vector<Poly> irr;
      detail::equal_degree_split(part, deg, rng, irr);
      for (auto& p : irr) {
        bool merged = false;
        for (auto& [f0, m0] : out.factors)
          if (f0 == p) {
            m0 += t.mult;
            merged = true;
            break;
          }
        if (!merged) out.factors.push_back({p, t.mult});
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

enum class MilnorType { Type1, Type2, Type3, NotStarIrreducible };

inline bool is_srim(const Poly& f) {
  if (f.degree() < 2 || f.degree() % 2 != 0) return false;
  if (!f.is_monic() || f.c[0] != 1) return false;  // SRIM forces f(0) = 1
  if (f != reciprocal_dual(f)) return false;
  return is_irreducible(f);
}

inline MilnorType milnor_type(const Poly& f) {
  if (f.is_zero() || f.c[0] == 0) throw ZeroConstantTerm("milnor_type needs f(0) != 0");
  if (f.degree() == 1 && f.is_monic()) {
    u64 c0 = f.c[0];
    if (c0 == 1 || c0 == f.k->neg(1)) return MilnorType::Type3;  // x +- 1
    return MilnorType::NotStarIrreducible;
  }
  if (is_srim(f)) return MilnorType::Type1;
  if (f.degree() >= 2 && f.degree() % 2 == 0) {
    Factorization fac = factorize(f);
    if (fac.unit == 1 && fac.factors.size() == 2 && fac.factors[0].second == 1 &&
        fac.factors[1].second == 1) {
      const Poly& g = fac.factors[0].first;
      const Poly& h = fac.factors[1].first;
      if (g.c[0] != 0 && g != reciprocal_dual(g) && h == reciprocal_dual(g))
        return MilnorType::Type2;
    }
  }
  return MilnorType::NotStarIrreducible;
}

// Multiplicative order of x in F_q[x]/(f) for irreducible f != x.
inline u64 exponent_of(const Poly& f) {
  if (f.degree() < 1) throw ConstantInput("exponent of a constant");
  if (f.degree() == 1 && f.c[0] == 0) throw XInput("exponent of x undefined");
  if (!is_irreducible(f)) throw Reducible("exponent needs irreducible input");
  u32 n = static_cast<u32>(f.degree());
  if (static_cast<double>(n) * std::log2(static_cast<double>(f.k->q)) >= 62)
    throw BoundExceeded("exponent: q^deg too large");
  u64 e = checked_pow_u64(f.k->q, n) - 1;
  Poly fm = make_monic(f);
  for (auto [pr, ex] : factor_u64(e)) {
    (void)ex;
    while (e % pr == 0 && poly_powmod(poly_x(f.k), e / pr, fm) == poly_one(f.k)) e /= pr;
  }
  return e;
}

// All SRIM polynomials of degree two_k = 2k.  These are exactly the monic
// irreducible palindromes with constant term 1, which is a direct scan of
// q^k candidates; every one of them divides H_{q,k} = x^{q^k+1} - 1
// (asserted as a property test at small scale rather than recomputed here).
inline std::vector<Poly> srim_enumerate(const Field& k, u32 two_k,
                                        u64 bound = u64(1) << 24) {
  if (two_k < 2 || two_k % 2 != 0) throw ParamDomain("srim_enumerate needs even degree >= 2");
  u32 half = two_k / 2;
  double bits = half * std::log2(static_cast<double>(k->q));
  if (bits >= 62 || checked_pow_u64(k->q, half) + 1 > bound)
    throw BoundExceeded("srim_enumerate: q^k + 1 exceeds factoring bound");
  std::vector<Poly> out;
  std::vector<u64> free_coeffs(half, 0);
  while (true) {
    std::vector<u64> c(two_k + 1, 0);
    c[0] = 1;
    c[two_k] = 1;
    for (u32 i = 1; i <= half; ++i) {
      c[i] = free_coeffs[i - 1];
      c[two_k - i] = free_coeffs[i - 1];
    }
    Poly f{k, std::move(c)};
    if (is_irreducible(f)) out.push_back(f);
    u32 i = 0;
    for (; i < half; ++i) {
      if (++free_coeffs[i] < k->q) break;
      free_coeffs[i] = 0;
    }
    if (i == half) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- Text formats -----------------------------------------------------------

// Coefficient wire format: "q=<q>:c0,c1,...,cn" (low-to-high).
inline std::string poly_to_text(const Poly& f) {
  std::string s = "q=" + std::to_string(f.k->q) + ":";
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f.c[i]);
  }
  return s;
}

inline Poly poly_from_text(const std::string& s) {
  if (s.rfind("q=", 0) != 0) throw ParseError("poly text must start with q=");
  size_t colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("poly text missing ':'");
  u64 q = std::stoull(s.substr(2, colon - 2));
  auto fac = factor_u64(q);
  if (fac.size() != 1) throw ParseError("q is not a prime power");
  Field k = FieldCtx::make(static_cast<u32>(fac[0].first), fac[0].second);
  std::vector<u64> c;
  size_t pos = colon + 1;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    c.push_back(std::stoull(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return poly_from(k, std::move(c));
}

// Human-readable rendering, high degree first: "x^4 + 3x^3 + 3x + 1".
inline std::string poly_to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (size_t i = f.c.size(); i-- > 0;) {
    if (f.c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    bool show_coeff = (f.c[i] != 1 || i == 0);
    if (show_coeff) s += std::to_string(f.c[i]);
    if (i >= 1) {
      s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace powercount
