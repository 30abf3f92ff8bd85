#pragma once

// Brute-force ground truth: enumerate small symplectic and orthogonal groups
// from explicit forms, classify every element (separable / semisimple /
// cyclic / regular), mark the image of the M-th power map, and compute the
// conjugacy partition with centralizer sizes.

#include <unordered_map>

#include "genfun.hpp"
#include "linalg.hpp"

namespace powercount {

enum class FormFamily { Sp, Oplus, Ominus, Oodd };

struct FormSpec {
  FormFamily family = FormFamily::Sp;
  u32 m = 2;
  u64 q = 2;
  Field k;
  Mat gram;                // bilinear (polar) form matrix
  std::vector<u64> qdiag;  // Q(e_i); used when `quadratic` (even q orthogonal)
  bool quadratic = false;
};

inline GroupKind form_group_kind(FormFamily f) {
  switch (f) {
    case FormFamily::Sp:
      return GroupKind::Sp;
    case FormFamily::Oplus:
      return GroupKind::Oplus;
    case FormFamily::Ominus:
      return GroupKind::Ominus;
    case FormFamily::Oodd:
      return GroupKind::Oodd;
  }
  throw Error("unreachable");
}

inline u64 smallest_nonsquare(const Field& k) {
  for (u64 c = 2; c < k->q; ++c) {
    bool square = false;
    for (u64 x = 1; x < k->q && !square; ++x)
      if (k->mul(x, x) == c) square = true;
    if (!square) return c;
  }
  throw Error("no non-square found");
}

inline FormSpec make_form(FormFamily family, u32 m, u64 q) {
  auto fac = factor_u64(q);
  FormSpec s;
  s.family = family;
  s.m = m;
  s.q = q;
  s.k = FieldCtx::make(static_cast<u32>(fac[0].first), fac[0].second);
  s.gram.n = m;
  s.gram.a.assign(static_cast<size_t>(m) * m, 0);
  s.qdiag.assign(m, 0);
  const bool q_odd = (q % 2 != 0);
  auto lam = [&](u32 row0, u32 col0, u32 l, u64 val) {
    for (u32 i = 0; i < l; ++i) s.gram.at(row0 + i, col0 + l - 1 - i) = val;
  };
  switch (family) {
    case FormFamily::Sp: {
      if (m % 2 != 0) throw ParamDomain("Sp needs even dimension");
      u32 n = m / 2;
      lam(0, n, n, 1);
      lam(n, 0, n, s.k->neg(1));
      return s;
    }
    case FormFamily::Oodd: {
      if (m % 2 != 1) throw ParamDomain("O^0 needs odd dimension");
      u32 n = (m - 1) / 2;
      if (q_odd) {
        lam(0, n + 1, n, 1);
        s.gram.at(n, n) = 1;  // alpha = 1
        lam(n + 1, 0, n, 1);
      } else {
        // Q = x_1^2 + sum x_{2i} x_{2i+1}
        s.quadratic = true;
        s.qdiag[0] = 1;
        for (u32 i = 0; i < n; ++i) {
          s.gram.at(1 + 2 * i, 2 + 2 * i) = 1;
          s.gram.at(2 + 2 * i, 1 + 2 * i) = 1;
        }
      }
      return s;
    }
    case FormFamily::Oplus: {
      if (m % 2 != 0) throw ParamDomain("O^+ needs even dimension");
      u32 n = m / 2;
      if (q_odd) {
        lam(0, n, n, 1);
        lam(n, 0, n, 1);
      } else {
        s.quadratic = true;  // Q = x1 x2 + x3 x4 + ...
        for (u32 i = 0; i < n; ++i) {
          s.gram.at(2 * i, 2 * i + 1) = 1;
          s.gram.at(2 * i + 1, 2 * i) = 1;
        }
      }
      return s;
    }
    case FormFamily::Ominus: {
      if (m % 2 != 0 || m < 2) throw ParamDomain("O^- needs even dimension >= 2");
      u32 n = m / 2;
      if (q_odd) {
        u64 delta = smallest_nonsquare(s.k);
        lam(0, n + 1, n - 1, 1);
        s.gram.at(n - 1, n - 1) = 1;
        s.gram.at(n, n) = s.k->neg(delta);
        lam(n + 1, 0, n - 1, 1);
      } else {
        // Q = x1^2 + x1 x2 + a x2^2 + x3 x4 + ..., t^2 + t + a irreducible
        s.quadratic = true;
        u64 a = 0;
        for (u64 c = 1; c < q; ++c) {
          Poly t = poly_from(s.k, {c, 1, 1});
          if (is_irreducible(t)) {
            a = c;
            break;
          }
        }
        s.qdiag[0] = 1;
        s.qdiag[1] = a;
        s.gram.at(0, 1) = 1;
        s.gram.at(1, 0) = 1;
        for (u32 i = 1; i < n; ++i) {
          s.gram.at(2 * i, 2 * i + 1) = 1;
          s.gram.at(2 * i + 1, 2 * i) = 1;
        }
      }
      return s;
    }
  }
  throw Error("unreachable");
}

inline bool preserves_form(const FormSpec& s, const Mat& a) {
  const Field& k = s.k;
  // tA * gram * A == gram, with column-wise early exit.
  for (u32 j = 0; j < s.m; ++j) {
    for (u32 i = 0; i < s.m; ++i) {
      u64 acc = 0;
      for (u32 r = 0; r < s.m; ++r) {
        if (a.at(r, i) == 0) continue;
        u64 t = 0;
        for (u32 c = 0; c < s.m; ++c)
          if (s.gram.at(r, c)) t = k->add(t, k->mul(s.gram.at(r, c), a.at(c, j)));
        acc = k->add(acc, k->mul(a.at(r, i), t));
      }
      if (acc != s.gram.at(i, j)) return false;
    }
  }
  if (s.quadratic) {
    auto qval = [&](u32 col) {
      u64 v = 0;
      for (u32 i = 0; i < s.m; ++i) {
        if (!a.at(i, col)) continue;
        v = k->add(v, k->mul(s.qdiag[i], k->mul(a.at(i, col), a.at(i, col))));
        for (u32 j2 = i + 1; j2 < s.m; ++j2)
          if (a.at(j2, col) && s.gram.at(i, j2))
            v = k->add(v, k->mul(s.gram.at(i, j2), k->mul(a.at(i, col), a.at(j2, col))));
      }
      return v;
    };
    for (u32 col = 0; col < s.m; ++col)
      if (qval(col) != s.qdiag[col]) return false;
  }
  return true;
}

struct GroupTable {
  FormSpec spec;
  std::vector<Mat> elements;
  std::unordered_map<std::string, u32> index;
  u64 order = 0;

  u32 find(const Mat& m) const {
    auto it = index.find(key_of(m));
    if (it == index.end()) throw NotInGroup("element not in table");
    return it->second;
  }
  static std::string key_of(const Mat& m) {
    std::string s(m.a.size(), '\0');
    for (size_t i = 0; i < m.a.size(); ++i) s[i] = static_cast<char>(m.a[i]);
    return s;
  }
};

inline constexpr u64 kScanBound = u64(1) << 26;
inline constexpr u64 kClosureBound = u64(1) << 17;

inline GroupTable build_group(const FormSpec& spec, u64 seed = 0x5eedu) {
  GroupTable t;
  t.spec = spec;
  const Field& k = spec.k;
  const u32 m = spec.m;
  BigInt expected_big = group_order(form_group_kind(spec.family), m, spec.q);
  if (expected_big > BigInt(u64(1) << 40)) throw BoundExceeded("group too large");
  u64 expected = expected_big.convert_to<u64>();
  double scan_bits = static_cast<double>(m) * m * std::log2(static_cast<double>(spec.q));

  auto insert = [&](const Mat& a) {
    auto key = GroupTable::key_of(a);
    if (t.index.emplace(key, static_cast<u32>(t.elements.size())).second)
      t.elements.push_back(a);
  };

  if (expected <= kClosureBound) {
    // Generator closure with a derandomized sampler.
    detail::SplitRng rng(seed);
    std::vector<Mat> gens;
    insert(Mat::identity(m));
    u64 attempts = 0;
    while (t.elements.size() < expected) {
      // sample until a form-preserving matrix appears
      Mat cand;
      cand.n = m;
      cand.a.resize(static_cast<size_t>(m) * m);
      while (true) {
        if (++attempts > 50'000'000ull) throw ClosureIncomplete("generator search exhausted");
        for (auto& x : cand.a) x = rng.next() % spec.q;
        if (preserves_form(spec, cand)) break;
      }
      gens.push_back(cand);
      // BFS closure from the current element set with all generators.
      std::vector<u32> work(t.elements.size());
      for (u32 i = 0; i < work.size(); ++i) work[i] = i;
      insert(cand);
      if (t.elements.size() > work.size()) work.push_back(static_cast<u32>(t.elements.size() - 1));
      for (size_t w = 0; w < work.size(); ++w) {
        Mat cur = t.elements[work[w]];
        for (const Mat& g : gens) {
          Mat prod = mat_mul(k, cur, g);
          auto key = GroupTable::key_of(prod);
          if (t.index.emplace(key, static_cast<u32>(t.elements.size())).second) {
            t.elements.push_back(prod);
            work.push_back(static_cast<u32>(t.elements.size() - 1));
          }
          if (t.elements.size() > expected) throw ClosureIncomplete("closure exceeded expected order");
        }
      }
    }
    t.order = t.elements.size();
    return t;
  }
  if (scan_bits <= 26.001 && checked_pow_u64(spec.q, m * m) <= kScanBound) {
    // Full scan of all m x m matrices.
    Mat a;
    a.n = m;
    a.a.assign(static_cast<size_t>(m) * m, 0);
    while (true) {
      if (preserves_form(spec, a)) insert(a);
      size_t i = 0;
      for (; i < a.a.size(); ++i) {
        if (++a.a[i] < spec.q) break;
        a.a[i] = 0;
      }
      if (i == a.a.size()) break;
    }
    t.order = t.elements.size();
    if (t.order != expected) throw Error("scan order mismatch against group_order");
    return t;
  }
  throw BoundExceeded("group exceeds scan and closure bounds");
}

// --- classification -----------------------------------------------------------

struct ElementProfile {
  Poly charpoly;
  Poly minpoly;
  bool separable = false;
  bool semisimple = false;
  bool cyclic = false;
  int regular = -1;  // 1 / 0 / -1 unknown (even-q orthogonal)
  u32 class_id = 0;
  u64 class_size = 0;
  u64 centralizer = 0;
};

namespace oracledetail {

inline Poly charpoly_cached(const Field& k, const Mat& a,
                            std::map<std::vector<u64>, Factorization>& fac_cache,
                            Factorization& fac_out) {
  Poly cp = mat_charpoly(k, a);
  auto it = fac_cache.find(cp.c);
  if (it == fac_cache.end()) it = fac_cache.emplace(cp.c, factorize(cp)).first;
  fac_out = it->second;
  return cp;
}

inline Mat poly_eval_mat(const Field& k, const Poly& p, const Mat& a) {
  Mat r;
  r.n = a.n;
  r.a.assign(a.a.size(), 0);
  for (size_t i = p.c.size(); i-- > 0;) {
    r = mat_mul(k, r, a);
    if (p.c[i])
      for (u32 d = 0; d < a.n; ++d) r.at(d, d) = k->add(r.at(d, d), p.c[i]);
  }
  return r;
}

inline bool is_zero_mat(const Mat& m) {
  for (u64 x : m.a)
    if (x) return false;
  return true;
}

// Minimal polynomial through the divisor lattice of the factored charpoly.
inline Poly minpoly_of(const Field& k, const Mat& a, const Factorization& charfac) {
  std::vector<u32> exps(charfac.factors.size(), 0);
  // find per-factor minimal exponent: phi^e part kills the phi-primary part
  Poly mp = poly_one(k);
  for (size_t i = 0; i < charfac.factors.size(); ++i) {
    const auto& [phi, mult] = charfac.factors[i];
    Mat base = poly_eval_mat(k, phi, a);
    // smallest e with rank(phi(A)^e) stable (the phi-primary is annihilated
    // exactly when combined with the other factors, so use rank stabilization)
    u32 e = 1;
    Mat cur = base;
    u32 prev_rank = mat_rank(k, cur);
    while (e < mult) {
      Mat nxt = mat_mul(k, cur, base);
      u32 rk = mat_rank(k, nxt);
      if (rk == prev_rank) break;
      cur = nxt;
      prev_rank = rk;
      ++e;
    }
    exps[i] = e;
    for (u32 j = 0; j < e; ++j) mp = poly_mul(mp, phi);
  }
  return mp;
}

// Jordan partition of the phi-primary component via rank decay of phi(A)^j.
inline std::vector<u32> primary_partition(const Field& k, const Mat& a, const Poly& phi,
                                          u32 char_mult) {
  u32 d = static_cast<u32>(phi.degree());
  std::vector<u32> ranks{a.n};
  Mat base = poly_eval_mat(k, phi, a);
  Mat cur = Mat::identity(a.n);
  for (u32 j = 1; j <= char_mult; ++j) {
    cur = mat_mul(k, cur, base);
    ranks.push_back(mat_rank(k, cur));
    if (ranks[j] == ranks[j - 1]) break;
  }
  // parts_ge[j] = (ranks[j-1] - ranks[j]) / deg(phi)
  std::vector<u32> parts_ge;
  for (size_t j = 1; j < ranks.size(); ++j) {
    u32 diff = ranks[j - 1] - ranks[j];
    if (diff == 0) break;
    parts_ge.push_back(diff / d);
  }
  std::vector<u32> parts;  // multiset of part sizes
  for (size_t j = 0; j < parts_ge.size(); ++j) {
    u32 here = parts_ge[j] - (j + 1 < parts_ge.size() ? parts_ge[j + 1] : 0);
    for (u32 c = 0; c < here; ++c) parts.push_back(static_cast<u32>(j + 1));
  }
  return parts;  // descending by construction? ensure sorted descending
}

}  // namespace oracledetail

struct ClassifiedGroup {
  std::vector<ElementProfile> profiles;
  std::vector<u32> class_rep;          // class id -> representative index
  std::vector<u64> class_size;
  u64 class_count = 0;
};

inline ClassifiedGroup classify_group(const GroupTable& t) {
  const Field& k = t.spec.k;
  ClassifiedGroup out;
  out.profiles.resize(t.elements.size());
  std::map<std::vector<u64>, Factorization> fac_cache;
  const bool q_odd = (t.spec.q % 2 != 0);
  const bool is_sp = (t.spec.family == FormFamily::Sp);

  for (size_t i = 0; i < t.elements.size(); ++i) {
    const Mat& a = t.elements[i];
    ElementProfile& p = out.profiles[i];
    Factorization charfac;
    p.charpoly = oracledetail::charpoly_cached(k, a, fac_cache, charfac);
    p.minpoly = oracledetail::minpoly_of(k, a, charfac);
    p.separable = true;
    for (auto& [phi, mult] : charfac.factors)
      if (mult > 1) p.separable = false;
    Factorization minfac;
    {
      auto it = fac_cache.find(p.minpoly.c);
      if (it == fac_cache.end()) it = fac_cache.emplace(p.minpoly.c, factorize(p.minpoly)).first;
      minfac = it->second;
    }
    p.semisimple = true;
    for (auto& [phi, mult] : minfac.factors)
      if (mult > 1) p.semisimple = false;
    p.cyclic = (p.minpoly == p.charpoly);
    if (is_sp) {
      p.regular = p.cyclic ? 1 : 0;
    } else if (!q_odd) {
      p.regular = -1;  // even-q orthogonal regularity is not classified here
    } else {
      bool reg = true;
      for (auto& [phi, mult] : charfac.factors) {
        bool tpm = (phi.degree() == 1 && (phi.c[0] == 1 || phi.c[0] == k->neg(1)));
        if (!tpm) {
          u32 minmult = 0;
          for (auto& [mphi, mm] : minfac.factors)
            if (mphi == phi) minmult = mm;
          if (minmult != mult) {
            reg = false;
            break;
          }
        } else {
          auto parts = oracledetail::primary_partition(k, a, phi, mult);
          u32 dim = 0;
          for (u32 part : parts) dim += part;
          if (dim % 2 == 1) {
            if (parts.size() > 1) {
              reg = false;
              break;
            }
          } else if (dim > 0) {
            bool near = (parts.size() == 2) &&
                        (parts[0] == 1 || parts[1] == 1);
            if (!near) {
              reg = false;
              break;
            }
          }
        }
      }
      p.regular = reg ? 1 : 0;
    }
  }

  // conjugacy partition: orbit of each unvisited element under conjugation
  std::vector<u32> inv_of(t.elements.size());
  for (size_t i = 0; i < t.elements.size(); ++i) {
    Mat inv;
    if (!mat_inverse(k, t.elements[i], inv)) throw Error("non-invertible element");
    inv_of[i] = t.find(inv);
  }
  std::vector<char> seen(t.elements.size(), 0);
  for (size_t i = 0; i < t.elements.size(); ++i) {
    if (seen[i]) continue;
    u32 cid = static_cast<u32>(out.class_rep.size());
    out.class_rep.push_back(static_cast<u32>(i));
    std::vector<u32> orbit;
    for (size_t g = 0; g < t.elements.size(); ++g) {
      Mat conj = mat_mul(k, t.elements[g], mat_mul(k, t.elements[i], t.elements[inv_of[g]]));
      u32 idx = t.find(conj);
      if (!seen[idx]) {
        seen[idx] = 1;
        orbit.push_back(idx);
      }
    }
    out.class_size.push_back(orbit.size());
    for (u32 idx : orbit) {
      out.profiles[idx].class_id = cid;
      out.profiles[idx].class_size = orbit.size();
      out.profiles[idx].centralizer = t.order / orbit.size();
    }
  }
  out.class_count = out.class_rep.size();
  return out;
}

// power_image[i] = true iff element i is an M-th power in the group.
inline std::vector<char> power_image(const GroupTable& t, u32 M) {
  std::vector<char> img(t.elements.size(), 0);
  for (size_t i = 0; i < t.elements.size(); ++i) {
    Mat p = mat_pow(t.spec.k, t.elements[i], M);
    img[t.find(p)] = 1;
  }
  return img;
}

enum class OracleStat { Separable, Semisimple, Cyclic, Regular };

struct EmpiricalValue {
  Rat element_ratio;   // matching elements / |G|
  u64 class_matching;  // number of matching conjugacy classes
  u64 class_total;     // total conjugacy classes
};

inline EmpiricalValue empirical_coefficient(const GroupTable& t, const ClassifiedGroup& c,
                                            OracleStat stat, u32 M) {
  std::vector<char> img = power_image(t, M);
  auto has_stat = [&](const ElementProfile& p) {
    switch (stat) {
      case OracleStat::Separable:
        return p.separable;
      case OracleStat::Semisimple:
        return p.semisimple;
      case OracleStat::Cyclic:
        return p.cyclic;
      case OracleStat::Regular:
        if (p.regular < 0) throw Error("regular flag unavailable for this group");
        return p.regular == 1;
    }
    return false;
  };
  u64 elem = 0;
  std::vector<char> class_hit(c.class_count, 0);
  for (size_t i = 0; i < t.elements.size(); ++i) {
    if (has_stat(c.profiles[i]) && img[i]) {
      ++elem;
      class_hit[c.profiles[i].class_id] = 1;
    }
  }
  u64 cls = 0;
  for (char h : class_hit) cls += h;
  return {Rat(BigInt(elem), BigInt(t.order)), cls, c.class_count};
}

// Wall datum of an element, without sign resolution.  The comparator below
// marks data whose centralizer order depends on the missing signs.
struct ExtractedDatum {
  std::vector<WallEntry> entries;
  bool sign_unambiguous = true;
};

inline ExtractedDatum extract_wall_datum(const GroupTable& t, const Mat& a) {
  const Field& k = t.spec.k;
  ExtractedDatum out;
  Factorization fac = factorize(mat_charpoly(k, a));
  const bool is_sp = (t.spec.family == FormFamily::Sp);
  for (auto& [phi, mult] : fac.factors) {
    WallEntry en;
    en.phi = phi;
    auto parts = oracledetail::primary_partition(k, a, phi, mult);
    std::map<u32, u32> by_part;
    for (u32 p : parts) by_part[p]++;
    for (auto [part, cnt] : by_part) en.partition.push_back({part, cnt, 0});
    bool tpm = (phi.degree() == 1 && (phi.c[0] == 1 || phi.c[0] == k->neg(1)));
    if (tpm) {
      if (t.spec.q % 2 == 0) {
        // char-2 refinements of t-1 data are outside the Wall odd-q tables;
        // only multiplicity-free semisimple data compare safely
        for (auto& wp : en.partition)
          if (wp.part != 1) out.sign_unambiguous = false;
      } else {
        for (auto& wp : en.partition) {
          bool signed_part = is_sp ? (wp.part % 2 == 0) : (wp.part % 2 == 1);
          if (signed_part && wp.mult % 2 == 0) out.sign_unambiguous = false;
        }
      }
    }
    out.entries.push_back(std::move(en));
  }
  return out;
}

// CSV snapshot per the external interface.
inline std::string export_csv(const GroupTable& t, const ClassifiedGroup& c,
                              const std::vector<u32>& Ms) {
  std::string s = "index,charpoly,minpoly,separable,semisimple,cyclic,regular,centralizer,class";
  for (u32 M : Ms) s += ",mpower" + std::to_string(M);
  s += "\n";
  std::vector<std::vector<char>> imgs;
  for (u32 M : Ms) imgs.push_back(power_image(t, M));
  for (size_t i = 0; i < t.elements.size(); ++i) {
    const auto& p = c.profiles[i];
    s += std::to_string(i) + "," + poly_to_text(p.charpoly) + "," + poly_to_text(p.minpoly) + ",";
    s += std::to_string(p.separable ? 1 : 0) + "," + std::to_string(p.semisimple ? 1 : 0) + ",";
    s += std::to_string(p.cyclic ? 1 : 0) + ",";
    s += (p.regular < 0 ? std::string("unclassified") : std::to_string(p.regular));
    s += "," + std::to_string(p.centralizer) + "," + std::to_string(p.class_id);
    for (auto& img : imgs) s += std::string(",") + (img[i] ? "1" : "0");
    s += "\n";
  }
  return s;
}

}  // namespace powercount
