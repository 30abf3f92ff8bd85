#pragma once

// Small exact integer helpers used throughout: gcd/ord arithmetic, trial
// division factoring, Mobius/Euler functions, divisor enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace powercount {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<__uint128_t>(a) * b) % m);
}

inline u64 powmod_u64(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// a^e with overflow check; throws on overflow past 2^63-1.
inline u64 checked_pow_u64(u64 a, u32 e) {
  u64 r = 1;
  for (u32 i = 0; i < e; ++i) {
    if (a != 0 && r > (static_cast<u64>(1) << 62) / a)
      throw std::overflow_error("checked_pow_u64: overflow");
    r *= a;
  }
  return r;
}

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Trial division.  Fine for the desk-scale inputs here (<= ~2^40).
inline std::vector<std::pair<u64, u32>> factor_u64(u64 n) {
  std::vector<std::pair<u64, u32>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      u32 e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.push_back({d, e});
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::vector<u64> divisors_u64(u64 n) {
  auto fac = factor_u64(n);
  std::vector<u64> divs{1};
  for (auto [p, e] : fac) {
    size_t s = divs.size();
    u64 pe = 1;
    for (u32 i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < s; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline int mobius_u64(u64 n) {
  if (n == 0) throw std::invalid_argument("mobius: n = 0");
  int sign = 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline u64 euler_phi_u64(u64 n) {
  u64 r = n;
  for (auto [p, e] : factor_u64(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline u64 mult_order_mod(u64 a, u64 n) {
  if (n == 1) return 1;
  a %= n;
  if (gcd_u64(a, n) != 1) throw std::invalid_argument("mult_order_mod: gcd != 1");
  u64 ord = euler_phi_u64(n);
  for (auto [p, e] : factor_u64(ord)) {
    (void)e;
    while (ord % p == 0 && powmod_u64(a, ord / p, n) == 1) ord /= p;
  }
  return ord;
}

inline u32 v2_u64(u64 n) {
  u32 v = 0;
  while (n && (n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  return v;
}

}  // namespace powercount
