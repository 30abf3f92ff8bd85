#pragma once

// Exact arithmetic in F_q, q = p^a.  Elements are encoded as integers in
// [0, q): the base-p digits are the coefficients of the residue polynomial,
// lowest degree first.  A prime field uses direct modular arithmetic; an
// extension field reduces by a deterministic modulus (the lexicographically
// smallest monic irreducible of degree a over F_p, coefficients compared
// low-to-high), so independent runs agree on every encoding.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "intutil.hpp"

namespace powercount {

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

inline constexpr u64 kFieldSizeBound = u64(1) << 20;

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  u32 p{};
  u32 a{};
  u64 q{};
  // Monic modulus of degree a over F_p, low-first, length a+1; empty for a = 1.
  std::vector<u32> modulus;

  static Field make(u32 p, u32 a);

  bool same(const FieldCtx& o) const { return p == o.p && a == o.a; }

  u64 zero() const { return 0; }
  u64 one() const { return 1; }

  std::vector<u32> repr(u64 x) const {
    std::vector<u32> d(a);
    for (u32 i = 0; i < a; ++i) {
      d[i] = static_cast<u32>(x % p);
      x /= p;
    }
    return d;
  }
  u64 from_repr(const std::vector<u32>& d) const {
    u64 x = 0;
    for (u32 i = a; i-- > 0;) x = x * p + (i < d.size() ? d[i] % p : 0);
    return x;
  }

  u64 add(u64 x, u64 y) const {
    if (a == 1) return (x + y) % p;
    u64 r = 0, mul = 1;
    for (u32 i = 0; i < a; ++i) {
      r += mul * ((x % p + y % p) % p);
      x /= p;
      y /= p;
      mul *= p;
    }
    return r;
  }
  u64 neg(u64 x) const {
    if (a == 1) return x ? p - x : 0;
    u64 r = 0, mul = 1;
    for (u32 i = 0; i < a; ++i) {
      u32 d = static_cast<u32>(x % p);
      r += mul * (d ? p - d : 0);
      x /= p;
      mul *= p;
    }
    return r;
  }
  u64 sub(u64 x, u64 y) const { return add(x, neg(y)); }

  u64 mul(u64 x, u64 y) const {
    if (a == 1) return mulmod_u64(x, y, p);
    if (x == 0 || y == 0) return 0;
    std::vector<u32> xd = repr(x), yd = repr(y);
    std::vector<u32> prod(2 * a - 1, 0);
    for (u32 i = 0; i < a; ++i) {
      if (!xd[i]) continue;
      for (u32 j = 0; j < a; ++j)
        prod[i + j] = static_cast<u32>((prod[i + j] + u64(xd[i]) * yd[j]) % p);
    }
    reduce_by_modulus(prod);
    u64 r = 0;
    for (u32 i = a; i-- > 0;) r = r * p + prod[i];
    return r;
  }

  u64 pow(u64 x, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  u64 inv(u64 x) const {
    if (x == 0) throw DivByZero("inverse of zero");
    return pow(x, q - 2);
  }
  u64 div(u64 x, u64 y) const {
    if (y == 0) throw DivByZero("division by zero");
    return mul(x, inv(y));
  }

  // Least e >= 1 with x^e = 1; divides q-1.
  u64 mult_order(u64 x) const {
    if (x == 0) throw ZeroElement("mult_order of zero");
    u64 ord = q - 1;
    for (auto [pr, ex] : q1_factors()) {
      (void)ex;
      while (ord % pr == 0 && pow(x, ord / pr) == 1) ord /= pr;
    }
    return ord;
  }

  // A fixed multiplicative generator (least element encoding that generates).
  u64 generator() const {
    std::call_once(gen_once_, [this] {
      for (u64 g = 1; g < q; ++g) {
        if (mult_order(g) == q - 1) {
          gen_ = g;
          return;
        }
      }
    });
    return gen_;
  }

  // F_{q^k} as F_p^{a k}; the embedding maps the fixed generator g of F_q to
  // G^{(q^k-1)/(q-1)} where G generates F_{q^k}.  Computed once per (ctx, k).
  Field extension(u32 k) const;
  u64 embed(u64 x, const Field& ext) const;

  const std::vector<std::pair<u64, u32>>& q1_factors() const {
    std::call_once(q1_once_, [this] { q1_fac_ = factor_u64(q - 1); });
    return q1_fac_;
  }

 private:
  void reduce_by_modulus(std::vector<u32>& c) const {
    // c has length 2a-1; fold degrees >= a down using x^a = -(lower part).
    for (u32 d = 2 * a - 2; d >= a && d < c.size(); --d) {
      u32 lead = c[d];
      if (lead) {
        c[d] = 0;
        for (u32 j = 0; j < a; ++j) {
          u64 sub = (u64(lead) * modulus[j]) % p;
          c[d - a + j] = static_cast<u32>((c[d - a + j] + p - sub) % p);
        }
      }
      if (d == a) break;
    }
  }

  mutable std::once_flag q1_once_;
  mutable std::vector<std::pair<u64, u32>> q1_fac_;
  mutable std::once_flag gen_once_;
  mutable u64 gen_ = 0;
  mutable std::mutex embed_mu_;
  mutable std::map<u32, std::vector<u64>> embed_tbl_;  // k -> per-element image

  friend struct FieldRegistry;
};

namespace detail {

// Polynomial helpers over F_p for modulus selection (a >= 2 only).
inline std::vector<u32> fp_polymulmod(const std::vector<u32>& x, const std::vector<u32>& y,
                                      const std::vector<u32>& m, u32 p) {
  u32 a = static_cast<u32>(m.size()) - 1;
  std::vector<u32> prod(2 * a - 1, 0);
  for (u32 i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (u32 j = 0; j < y.size(); ++j)
      prod[i + j] = static_cast<u32>((prod[i + j] + u64(x[i]) * y[j]) % p);
  }
  for (u32 d = 2 * a - 2; d >= a; --d) {
    u32 lead = prod[d];
    if (lead) {
      prod[d] = 0;
      for (u32 j = 0; j < a; ++j) {
        u64 sub = (u64(lead) * m[j]) % p;
        prod[d - a + j] = static_cast<u32>((prod[d - a + j] + p - sub) % p);
      }
    }
    if (d == a) break;
  }
  prod.resize(a);
  return prod;
}

inline std::vector<u32> fp_polypow_x(u64 e, const std::vector<u32>& m, u32 p) {
  u32 a = static_cast<u32>(m.size()) - 1;
  std::vector<u32> r(a, 0), b(a, 0);
  r[0] = 1;
  if (a == 1) {
    // x reduces to the constant -m[0]
    b[0] = (p - m[0]) % p;
  } else {
    b[1] = 1;
  }
  while (e) {
    if (e & 1) r = fp_polymulmod(r, b, m, p);
    b = fp_polymulmod(b, b, m, p);
    e >>= 1;
  }
  return r;
}

inline bool fp_is_irreducible(const std::vector<u32>& m, u32 p) {
  // Rabin test for a monic m of degree a over F_p: x^{p^a} = x mod m and
  // gcd-free at proper prime quotients, checked as x^{p^{a/r}} != x.
  u32 a = static_cast<u32>(m.size()) - 1;
  if (a == 1) return true;
  if (m[0] == 0) return false;
  auto xq = [&](u32 deg_exp) {
    u64 e = 1;
    for (u32 i = 0; i < deg_exp; ++i) e *= p;
    return fp_polypow_x(e, m, p);
  };
  std::vector<u32> xa = xq(a);
  std::vector<u32> x(a, 0);
  if (a >= 2) x[1] = 1;
  if (xa != x) return false;
  for (auto [r, e] : factor_u64(a)) {
    (void)e;
    if (xq(a / static_cast<u32>(r)) == x) return false;
  }
  return true;
}

}  // namespace detail

struct FieldRegistry {
  static Field get(u32 p, u32 a) {
    static std::mutex mu;
    static std::map<std::pair<u32, u32>, Field> reg;
    std::lock_guard<std::mutex> lk(mu);
    auto it = reg.find({p, a});
    if (it != reg.end()) return it->second;
    auto ctx = std::make_shared<FieldCtx>();
    ctx->p = p;
    ctx->a = a;
    u64 q = 1;
    for (u32 i = 0; i < a; ++i) {
      q *= p;
      if (q > kFieldSizeBound) throw BoundExceeded("field size exceeds 2^20");
    }
    ctx->q = q;
    if (a >= 2) {
      // Lexicographically smallest monic irreducible of degree a over F_p,
      // coefficients compared low-to-high as integers (c0 is the most
      // significant key), so iterate with the highest index moving fastest.
      std::vector<u32> m(a + 1, 0);
      m[a] = 1;
      bool found = false;
      while (true) {
        if (detail::fp_is_irreducible(m, p)) {
          found = true;
          break;
        }
        u32 i = a;
        while (i-- > 0) {
          if (++m[i] < p) break;
          m[i] = 0;
          if (i == 0) break;
        }
        if (i == 0 && m[0] == 0) break;  // wrapped around
      }
      if (!found) throw Error("no irreducible modulus found");
      ctx->modulus = m;
    }
    Field f = ctx;
    reg[{p, a}] = f;
    return f;
  }
};

inline Field FieldCtx::make(u32 p, u32 a) {
  if (!is_prime_u64(p)) throw NonPrime("p is not prime");
  if (a < 1) throw Error("extension degree must be >= 1");
  return FieldRegistry::get(p, a);
}

inline Field FieldCtx::extension(u32 k) const {
  if (k < 1) throw Error("extension: k >= 1 required");
  return FieldRegistry::get(p, a * k);
}

inline u64 FieldCtx::embed(u64 x, const Field& ext) const {
  if (ext->p != p || ext->a % a != 0) throw CtxMismatch("not an extension of this field");
  if (a == 1) {
    // Prime subfield embeds as the constants directly.
    return x % p;
  }
  std::lock_guard<std::mutex> lk(embed_mu_);
  u32 k = ext->a / a;
  auto it = embed_tbl_.find(k);
  if (it == embed_tbl_.end()) {
    std::vector<u64> tbl(q, 0);
    u64 g = generator();
    u64 big_g = ext->pow(ext->generator(), (ext->q - 1) / (q - 1));
    u64 cur = 1, img = 1;
    tbl[1] = 1;
    for (u64 i = 1; i < q - 1; ++i) {
      cur = mul(cur, g);
      img = ext->mul(img, big_g);
      tbl[cur] = img;
    }
    it = embed_tbl_.emplace(k, std::move(tbl)).first;
  }
  return it->second[x];
}

// The spec-level operation surface.

inline Field field_make(u32 p, u32 a) { return FieldCtx::make(p, a); }

enum class ArithKind { Add, Sub, Mul, Div };

inline u64 elem_arith(const Field& kx, u64 x, const Field& ky, u64 y, ArithKind kind) {
  if (!kx->same(*ky)) throw CtxMismatch("elements from different fields");
  switch (kind) {
    case ArithKind::Add:
      return kx->add(x, y);
    case ArithKind::Sub:
      return kx->sub(x, y);
    case ArithKind::Mul:
      return kx->mul(x, y);
    case ArithKind::Div:
      return kx->div(x, y);
  }
  throw Error("unreachable");
}

}  // namespace powercount
