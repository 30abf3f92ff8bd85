#pragma once

// Classification of polynomials under the M-th power map: power spectra
// D_M(f) and D*_M(f), M-power / M*-power flags, degenerate detection,
// admissible-multiplicity monoids, the (degree, exponent) indicator function,
// and companion-matrix power characteristic polynomials.

#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "linalg.hpp"
#include "polyring.hpp"

namespace powercount {

struct PowerProfile {
  Poly f;
  u32 M = 1;
  std::vector<u32> spectrum;       // multiset of factor degrees of f(x^M), sorted
  std::vector<u32> star_spectrum;  // distinct degrees realized by SRIM factors
  bool is_m_power = false;
  bool is_mstar_power = false;
};

inline void require_power_preconditions(const Poly& f, u32 M) {
  if (M < 1) throw ParamDomain("M >= 1 required");
  if (M % f.k->p == 0) throw PCharConflict("gcd(M, q) != 1 required");
  if (f.degree() < 1 || !is_irreducible(f)) throw NotIrreducible("irreducible input required");
  if (f.degree() == 1 && f.c[0] == 0) throw NotIrreducible("f = x excluded");
}

// Spectrum of f(x^M) by distinct-degree decomposition (f(x^M) is squarefree
// for gcd(M, q) = 1), with SRIM factors of degree 2t recognized as the part
// dividing x^{q^t + 1} - 1.
inline PowerProfile power_profile(const Poly& f, u32 M) {
  require_power_preconditions(f, M);
  PowerProfile prof;
  prof.f = f;
  prof.M = M;
  Poly comp = compose_power(make_monic(f), M);
  for (auto& [d, part] : distinct_degree_parts(comp)) {
    u32 count = static_cast<u32>(part.degree()) / d;
    for (u32 i = 0; i < count; ++i) prof.spectrum.push_back(d);
    if (d % 2 == 0) {
      // x^{q^{d/2}} mod part by iterated Frobenius, then one extra x.
      Poly h = poly_x(f.k);
      for (u32 j = 0; j < d / 2; ++j) h = poly_powmod(h, f.k->q, part);
      Poly torus = poly_sub(poly_mulmod(h, poly_x(f.k), part), poly_one(f.k));
      Poly g = poly_gcd(torus, part);
      if (g.degree() > 0) prof.star_spectrum.push_back(d);
    }
  }
  std::sort(prof.spectrum.begin(), prof.spectrum.end());
  u32 n = static_cast<u32>(f.degree());
  prof.is_m_power =
      std::find(prof.spectrum.begin(), prof.spectrum.end(), n) != prof.spectrum.end();
  prof.is_mstar_power =
      std::find(prof.star_spectrum.begin(), prof.star_spectrum.end(), n) !=
      prof.star_spectrum.end();
  return prof;
}

inline bool is_degenerate(const Poly& f, u32 M, u32 n) {
  if (n == 0 || n % static_cast<u32>(f.degree()) != 0)
    throw DegreeMismatch("deg f must divide n");
  PowerProfile p = power_profile(f, M);
  if (p.is_m_power) return false;
  return std::find(p.spectrum.begin(), p.spectrum.end(), n) != p.spectrum.end();
}

// Admissible multiplicities m for which the semisimple class (f, 1^m) is an
// M-th power, as generators of an additive monoid in multiplicity units.
// A factor g of f(x^M) of degree k yields: for self-reciprocal f, the block
// C_g when g is SRIM (multiplicity k/deg f) or the pair C_g + C_{g*}
// (multiplicity 2k/deg f) otherwise; for a dual pair {f, f*} each factor
// feeds f and f* separately (multiplicity k/deg f).
inline std::vector<u64> multiplicity_gens_from_profile(const PowerProfile& p) {
  bool self_dual = (make_monic(p.f) == reciprocal_dual(make_monic(p.f)));
  u32 n = static_cast<u32>(p.f.degree());
  std::set<u64> gens;
  std::set<u32> star(p.star_spectrum.begin(), p.star_spectrum.end());
  for (u32 d : std::set<u32>(p.spectrum.begin(), p.spectrum.end())) {
    if (!self_dual)
      gens.insert(d / n);
    else if (star.count(d))
      gens.insert(d / n);
    else
      gens.insert(2ull * d / n);
  }
  return {gens.begin(), gens.end()};
}

inline std::vector<u64> multiplicity_semigroup(const Poly& f, u32 M) {
  PowerProfile p = power_profile(f, M);
  auto gens = multiplicity_gens_from_profile(p);
  // 1 being a generator means every multiplicity works: for self-reciprocal f
  // that is the M*-power case, for a dual pair the M-power case.
  if (!gens.empty() && gens.front() == 1)
    throw AlreadyMPower("every multiplicity is admissible for this f");
  return gens;
}

inline bool monoid_member(const std::vector<u64>& gens, u64 m) {
  if (m == 0) return true;
  std::vector<char> reach(m + 1, 0);
  reach[0] = 1;
  for (u64 i = 1; i <= m; ++i)
    for (u64 g : gens)
      if (g >= 1 && g <= i && reach[i - g]) {
        reach[i] = 1;
        break;
      }
  return reach[m] != 0;
}

// --- (degree, exponent) strata ----------------------------------------------

struct IndicatorKey {
  u64 q;
  u32 M;
  u32 n;  // polynomial degree
  u64 e;  // exponent
  bool operator<(const IndicatorKey& o) const {
    return std::tie(q, M, n, e) < std::tie(o.q, o.M, o.n, o.e);
  }
};

namespace detail {

// Minimal polynomial of y in F_q[x]/(h) by linear dependency of its powers.
inline Poly quotient_minpoly(const Poly& y, const Poly& h) {
  const Field& k = h.k;
  u32 n = static_cast<u32>(h.degree());
  std::vector<std::vector<u64>> rows;  // each row: power as vector + tag coeffs
  Poly cur = poly_one(k);
  for (u32 i = 0; i <= n; ++i) {
    std::vector<u64> row(n + i + 1, 0);
    for (u32 j = 0; j < n; ++j) row[j] = cur.coeff(j);
    row[n + i] = 1;  // tag: coefficient of t^i
    // Eliminate against existing rows.
    for (auto& r : rows) {
      u32 lead = 0;
      while (lead < n && r[lead] == 0) ++lead;
      if (lead < n && row[lead] != 0) {
        u64 fct = k->mul(row[lead], k->inv(r[lead]));
        for (u32 j = 0; j < r.size() && j < row.size(); ++j)
          row[j] = k->sub(row[j], k->mul(fct, r[j]));
      }
    }
    bool zero = true;
    for (u32 j = 0; j < n; ++j)
      if (row[j]) {
        zero = false;
        break;
      }
    if (zero) {
      std::vector<u64> c(i + 1, 0);
      for (u32 j = 0; j <= i; ++j) c[j] = row[n + j];
      Poly m{k, std::move(c)};
      m.trim();
      return make_monic(m);
    }
    // Normalize leading entry for later eliminations.
    rows.push_back(row);
    cur = poly_mulmod(cur, y, h);
  }
  throw Error("quotient_minpoly: no dependency found");
}

// Deterministic monic irreducible of degree n over F_q (smallest in the
// canonical order).
inline Poly first_irreducible(const Field& k, u32 n) {
  if (n == 1) return poly_x(k);
  std::vector<u64> free_coeffs(n, 0);
  while (true) {
    std::vector<u64> c(free_coeffs);
    c.push_back(1);
    Poly f{k, std::move(c)};
    if (f.c[0] != 0 && is_irreducible(f)) return f;
    u32 i = 0;
    for (; i < n; ++i) {
      if (++free_coeffs[i] < k->q) break;
      free_coeffs[i] = 0;
    }
    if (i == n) throw Error("first_irreducible: exhausted");
  }
}

}  // namespace detail

// True when a monic irreducible of degree n and exponent e exists over F_q:
// e must divide q^n - 1 and the order of q mod e must be exactly n.
inline bool stratum_exists(const Field& k, u32 n, u64 e) {
  if (e == 1) return n == 1;  // only x - 1
  if (static_cast<double>(n) * std::log2(static_cast<double>(k->q)) >= 62) return false;
  u64 qn1 = checked_pow_u64(k->q, n) - 1;
  if (qn1 % e != 0) return false;
  return mult_order_mod(k->q % e, e) == n;
}

// A representative irreducible of degree n and exponent e: the minimal
// polynomial of z^{(q^n-1)/e} for a fixed multiplicative generator z of
// F_q[x]/(h), h the canonical irreducible of degree n.
inline Poly representative_poly(const Field& k, u32 n, u64 e) {
  if (!stratum_exists(k, n, e)) throw NoRepresentative("no irreducible of this degree/exponent");
  if (e == 1) return poly_from(k, {k->neg(1), 1});  // x - 1
  if (n == 1) {
    u64 y = k->pow(k->generator(), (k->q - 1) / e);
    return poly_from(k, {k->neg(y), 1});
  }
  Poly h = detail::first_irreducible(k, n);
  u64 qn1 = checked_pow_u64(k->q, n) - 1;
  auto fac = factor_u64(qn1);
  // Deterministic generator search: candidates in fixed encoding order.
  for (u64 counter = k->q;; ++counter) {
    std::vector<u64> c;
    u64 t = counter;
    while (t) {
      c.push_back(t % k->q);
      t /= k->q;
    }
    Poly z{k, std::move(c)};
    z.trim();
    if (z.degree() < 1 || z.degree() >= static_cast<int>(n)) continue;
    bool ok = true;
    for (auto [pr, ex] : fac) {
      (void)ex;
      if (poly_powmod(z, qn1 / pr, h) == poly_one(k)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Poly y = poly_powmod(z, qn1 / e, h);
    Poly rep = detail::quotient_minpoly(y, h);
    if (rep.degree() != static_cast<int>(n)) throw Error("representative degree mismatch");
    return rep;
  }
}

struct StratumProfile {
  std::vector<u64> indicator_gens;  // Def-style monoid in u-powers
  std::vector<u64> mult_gens;       // multiplicity-unit monoid
  bool is_m_power = false;
  bool is_mstar_power = false;
};

inline const StratumProfile& stratum_profile(const IndicatorKey& key) {
  static std::mutex mu;
  static std::map<IndicatorKey, StratumProfile> memo;
  std::lock_guard<std::mutex> lk(mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto fac = factor_u64(key.q);
  Field k = FieldCtx::make(static_cast<u32>(fac[0].first), fac[0].second);
  Poly rep = representative_poly(k, key.n, key.e);
  PowerProfile p = power_profile(rep, key.M);
  StratumProfile sp;
  sp.is_m_power = p.is_m_power;
  sp.is_mstar_power = p.is_mstar_power;
  std::set<u32> star(p.star_spectrum.begin(), p.star_spectrum.end());
  std::set<u64> ig;
  for (u32 d : std::set<u32>(p.spectrum.begin(), p.spectrum.end()))
    ig.insert(star.count(d) ? d / 2 : static_cast<u64>(d));
  sp.indicator_gens.assign(ig.begin(), ig.end());
  sp.mult_gens = multiplicity_gens_from_profile(p);
  return memo.emplace(key, std::move(sp)).first->second;
}

// Indicator of Definition-style G_f: 1 iff u^k has nonzero coefficient in
// 1 / prod_{i in D*}(1 - u^{i/2}) prod_{j in D \ D*}(1 - u^j).
inline int indicator(const IndicatorKey& key, u64 kk) {
  const StratumProfile& sp = stratum_profile(key);
  return monoid_member(sp.indicator_gens, kk) ? 1 : 0;
}

// Whether the class (f, 1^m) with f of the given stratum is an M-th power.
inline bool mult_admissible(const IndicatorKey& key, u64 m) {
  const StratumProfile& sp = stratum_profile(key);
  return monoid_member(sp.mult_gens, m);
}

// Characteristic polynomial of C_f^M, returned factored.  Computed as the
// characteristic polynomial of multiplication by x^M on F_q[x]/(f).
inline Factorization companion_power_charpoly(const Poly& f, u32 M) {
  if (f.is_zero() || f.c[0] == 0) throw ZeroConstantTerm("companion power needs f(0) != 0");
  if (M == 1) return factorize(f);
  Poly fm = make_monic(f);
  u32 n = static_cast<u32>(fm.degree());
  const Field& k = f.k;
  Poly u = poly_powmod(poly_x(k), M, fm);
  Mat mult;
  mult.n = n;
  mult.a.assign(static_cast<size_t>(n) * n, 0);
  Poly cur = u;
  for (u32 col = 0; col < n; ++col) {
    for (u32 row = 0; row < n; ++row) mult.at(row, col) = cur.coeff(row);
    if (col + 1 < n) cur = poly_mulmod(cur, poly_x(k), fm);
  }
  Poly cp = mat_charpoly(k, mult);
  return factorize(cp);
}

}  // namespace powercount
