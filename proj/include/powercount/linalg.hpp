#pragma once

// Dense matrices over F_q, sized for the oracle's tiny groups. Row-major.

#include <vector>

#include "polyring.hpp"

namespace powercount {

struct Mat {
  u32 n = 0;
  std::vector<u64> a;  // n*n entries, row-major

  static Mat identity(u32 n) {
    Mat m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0);
    for (u32 i = 0; i < n; ++i) m.a[static_cast<size_t>(i) * n + i] = 1;
    return m;
  }
  u64& at(u32 i, u32 j) { return a[static_cast<size_t>(i) * n + j]; }
  u64 at(u32 i, u32 j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

inline Mat mat_mul(const Field& k, const Mat& x, const Mat& y) {
  Mat r;
  r.n = x.n;
  r.a.assign(x.a.size(), 0);
  for (u32 i = 0; i < x.n; ++i)
    for (u32 l = 0; l < x.n; ++l) {
      u64 v = x.at(i, l);
      if (!v) continue;
      for (u32 j = 0; j < x.n; ++j)
        r.at(i, j) = k->add(r.at(i, j), k->mul(v, y.at(l, j)));
    }
  return r;
}

inline Mat mat_transpose(const Mat& x) {
  Mat r;
  r.n = x.n;
  r.a.resize(x.a.size());
  for (u32 i = 0; i < x.n; ++i)
    for (u32 j = 0; j < x.n; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

inline Mat mat_pow(const Field& k, Mat x, u64 e) {
  Mat r = Mat::identity(x.n);
  while (e) {
    if (e & 1) r = mat_mul(k, r, x);
    x = mat_mul(k, x, x);
    e >>= 1;
  }
  return r;
}

inline u32 mat_rank(const Field& k, Mat m) {
  u32 rank = 0;
  for (u32 col = 0; col < m.n && rank < m.n; ++col) {
    u32 pivot = m.n;
    for (u32 r = rank; r < m.n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot == m.n) continue;
    for (u32 j = 0; j < m.n; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    u64 inv = k->inv(m.at(rank, col));
    for (u32 j = col; j < m.n; ++j) m.at(rank, j) = k->mul(m.at(rank, j), inv);
    for (u32 r = 0; r < m.n; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      u64 f = m.at(r, col);
      for (u32 j = col; j < m.n; ++j)
        m.at(r, j) = k->sub(m.at(r, j), k->mul(f, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

inline bool mat_inverse(const Field& k, Mat m, Mat& out) {
  u32 n = m.n;
  Mat inv = Mat::identity(n);
  for (u32 col = 0; col < n; ++col) {
    u32 pivot = n;
    for (u32 r = col; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return false;
    for (u32 j = 0; j < n; ++j) {
      std::swap(m.at(col, j), m.at(pivot, j));
      std::swap(inv.at(col, j), inv.at(pivot, j));
    }
    u64 iv = k->inv(m.at(col, col));
    for (u32 j = 0; j < n; ++j) {
      m.at(col, j) = k->mul(m.at(col, j), iv);
      inv.at(col, j) = k->mul(inv.at(col, j), iv);
    }
    for (u32 r = 0; r < n; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      u64 f = m.at(r, col);
      for (u32 j = 0; j < n; ++j) {
        m.at(r, j) = k->sub(m.at(r, j), k->mul(f, m.at(col, j)));
        inv.at(r, j) = k->sub(inv.at(r, j), k->mul(f, inv.at(col, j)));
      }
    }
  }
  out = inv;
  return true;
}

// Characteristic polynomial det(xI - A), monic, via Hessenberg reduction.
inline Poly mat_charpoly(const Field& k, Mat m) {
  u32 n = m.n;
  // Reduce to upper Hessenberg with similarity transforms.
  for (u32 col = 0; col + 2 < n; ++col) {
    u32 pivot = n;
    for (u32 r = col + 1; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) continue;
    if (pivot != col + 1) {
      for (u32 j = 0; j < n; ++j) std::swap(m.at(col + 1, j), m.at(pivot, j));
      for (u32 i = 0; i < n; ++i) std::swap(m.at(i, col + 1), m.at(i, pivot));
    }
    u64 inv = k->inv(m.at(col + 1, col));
    for (u32 r = col + 2; r < n; ++r) {
      u64 f = k->mul(m.at(r, col), inv);
      if (!f) continue;
      for (u32 j = 0; j < n; ++j) m.at(r, j) = k->sub(m.at(r, j), k->mul(f, m.at(col + 1, j)));
      for (u32 i = 0; i < n; ++i) m.at(i, col + 1) = k->add(m.at(i, col + 1), k->mul(f, m.at(i, r)));
    }
  }
  // charpoly recurrence on the Hessenberg form.
  std::vector<Poly> p(n + 1, poly_one(k));
  for (u32 i = 1; i <= n; ++i) {
    // p_i = (x - h_{i-1,i-1}) p_{i-1} - sum_{j<i-1} h_{j,i-1} (prod subdiag) p_j
    Poly t = poly_mul(Poly{k, {k->neg(m.at(i - 1, i - 1)), 1}}, p[i - 1]);
    u64 sub = 1;
    for (u32 j = i - 1; j-- > 0;) {
      sub = k->mul(sub, m.at(j + 1, j));
      if (sub == 0) break;
      u64 coef = k->mul(sub, m.at(j, i - 1));
      if (coef) t = poly_sub(t, poly_scale(p[j], coef));
    }
    p[i] = t;
  }
  return p[n];
}

}  // namespace powercount
