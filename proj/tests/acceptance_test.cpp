// Acceptance suite: runs each acceptance criterion and prints one PASS/FAIL
// line per criterion.  Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <set>

#include "powercount/cache.hpp"
#include "powercount/oracle.hpp"

using namespace powercount;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

int failures = 0;

void report(int idx, bool ok, const std::string& what, double secs) {
  if (!ok) ++failures;
  std::printf("CRITERION %d %s  %s  (%.1fs)\n", idx, ok ? "PASS" : "FAIL", what.c_str(), secs);
  std::fflush(stdout);
}

// ---- 1: golden factorizations ------------------------------------------------

bool criterion1(std::string& label) {
  Field f5 = field_make(5, 1);
  Timer t1;
  Factorization fa = factorize(poly_xn_minus_1(f5, 26));
  double s1 = t1.seconds();
  std::vector<std::vector<u64>> exp26 = {
      {1, 1},          {4, 1},          {1, 1, 4, 1, 1}, {1, 2, 0, 2, 1},
      {1, 2, 1, 2, 1}, {1, 3, 0, 3, 1}, {1, 3, 1, 3, 1}, {1, 4, 4, 4, 1}};
  bool ok = fa.factors.size() == 8;
  for (size_t i = 0; ok && i < 8; ++i)
    ok = fa.factors[i].first.c == exp26[i] && fa.factors[i].second == 1;

  Field f2 = field_make(2, 1);
  Timer t2;
  Factorization fb = factorize(poly_xn_minus_1(f2, 65));
  double s2 = t2.seconds();
  std::vector<std::vector<u64>> exp65 = {
      {1, 1},
      {1, 1, 1, 1, 1},
      {1, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 1},
      {1, 0, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1},
      {1, 0, 1, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1},
      {1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 1},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};
  ok = ok && fb.factors.size() == 7;
  for (size_t i = 0; ok && i < 7; ++i) ok = fb.factors[i].first.c == exp65[i];
  ok = ok && s1 < 1.0 && s2 < 1.0;
  label = "golden factorizations x^26-1 / x^65-1";
  return ok;
}

// ---- 2: Example 4.8 flags ----------------------------------------------------

bool criterion2(std::string& label) {
  Field f5 = field_make(5, 1);
  auto pa = power_profile(poly_from(f5, {1, 3, 0, 3, 1}), 2);
  auto pb = power_profile(poly_from(f5, {1, 3, 1, 3, 1}), 2);
  label = "Example 4.8 power flags";
  return pa.is_mstar_power && pa.is_m_power && pb.is_m_power && !pb.is_mstar_power;
}

// ---- 3: Example 4.9 companion power -----------------------------------------

bool criterion3(std::string& label) {
  Field f3 = field_make(3, 1);
  Poly g = poly_from(f3, {1, 2, 2, 2, 1, 0, 1, 0, 1, 2, 2, 2, 1});
  Timer t;
  Factorization fac = companion_power_charpoly(g, 73);
  bool ok = t.seconds() < 5.0 && fac.factors.size() == 1 &&
            fac.factors[0].first == poly_from(f3, {1, 1, 1, 1, 1}) && fac.factors[0].second == 3;
  label = "Example 4.9 companion 73rd power";
  return ok;
}

// ---- 4: formula = enumeration on the grid ------------------------------------

bool criterion4(std::string& label) {
  bool ok = true;
  u64 cells = 0;
  auto check = [&](const CountQuery& query) {
    Frac closed = count_closed_variant(query, FormulaVariant::Fixed);
    u64 twin = enumerate_count(query);
    ++cells;
    if (!(closed.integral() && closed.num >= 0 && static_cast<u64>(closed.num) == twin)) {
      ok = false;
      std::printf("  count mismatch: family=%d q=%llu M=%u deg=%u k=%u e=%llu closed=%lld/%lld "
                  "twin=%llu\n",
                  static_cast<int>(query.family), static_cast<unsigned long long>(query.q),
                  query.M, query.deg, query.k, static_cast<unsigned long long>(query.e),
                  static_cast<long long>(closed.num), static_cast<long long>(closed.den),
                  static_cast<unsigned long long>(twin));
    }
  };
  for (u64 q : {2ull, 3ull, 5ull}) {
    for (u32 M = 1; M <= 5; ++M) {
      if (M % factor_u64(q)[0].first == 0) continue;
      for (u32 two_k = 2; two_k <= 12; two_k += 2)
        check({q, M, two_k, 1, 0, CountFamily::NstarM});
      for (u32 k = 1; k <= 8; ++k) {
        check({q, M, k, 1, 0, CountFamily::NM});
        check({q, M, 2 * k, 1, 0, CountFamily::Rstar});
      }
      for (u32 two_n = 2; two_n <= 12; two_n += 2)
        for (u32 k = 1; k <= two_n / 2; k += 2) {
          if ((two_n / 2) % k) continue;
          check({q, M, two_n, k, 0, CountFamily::NstarM_deg});
        }
      for (u32 n = 1; n <= 8; ++n)
        for (u32 k = 1; k <= n; ++k) {
          if (n % k) continue;
          check({q, M, n, k, 0, CountFamily::NM_deg});
          check({q, M, 2 * n, k, 0, CountFamily::Rstar_deg});
        }
      for (u32 two_n = 2; two_n <= 12; two_n += 2)
        for (u64 e : divisors_u64(checked_pow_u64(q, two_n / 2) + 1))
          check({q, M, two_n, 1, e, CountFamily::Nstar_e});
      for (u32 n = 1; n <= 8; ++n)
        for (u64 e : divisors_u64(checked_pow_u64(q, n) - 1)) {
          check({q, M, n, 1, e, CountFamily::N_e});
          check({q, M, 2 * n, 1, e, CountFamily::Rstar_e});
        }
    }
  }
  label = "closed form = enumeration twin on " + std::to_string(cells) + " grid cells";
  return ok;
}

// ---- 5/6: series vs oracle ----------------------------------------------------

struct Loaded {
  GroupTable table;
  ClassifiedGroup cls;
};

Loaded load(FormFamily fam, u32 m, u64 q) {
  GroupTable t = build_group(make_form(fam, m, q));
  ClassifiedGroup c = classify_group(t);
  return {std::move(t), std::move(c)};
}

bool check_sp_rank(const Loaded& g, u64 q, u32 rank, u32 M, bool& all_ok) {
  bool ok = true;
  for (auto st : {Statistic::Separable, Statistic::Semisimple, Statistic::Cyclic}) {
    OracleStat os = st == Statistic::Separable    ? OracleStat::Separable
                    : st == Statistic::Semisimple ? OracleStat::Semisimple
                                                  : OracleStat::Cyclic;
    EmpiricalValue ev = empirical_coefficient(g.table, g.cls, os, M);
    GFRequest rp{GroupFamily::Sp, st, Weighting::Probability, q, M, static_cast<int>(rank)};
    GFRequest rc = rp;
    rc.weight = Weighting::Classes;
    Rat prob = gf_sp(rp).at(static_cast<int>(rank));
    Rat cls = gf_sp(rc).at(static_cast<int>(rank));
    if (prob != ev.element_ratio || cls != Rat(BigInt(ev.class_matching))) {
      ok = false;
      std::printf("  Sp(%u,%llu) M=%u stat=%d: series %s/%s oracle %s/%llu\n", 2 * rank,
                  static_cast<unsigned long long>(q), M, static_cast<int>(st),
                  rat_to_string(prob).c_str(), rat_to_string(cls).c_str(),
                  rat_to_string(ev.element_ratio).c_str(),
                  static_cast<unsigned long long>(ev.class_matching));
    }
  }
  all_ok = all_ok && ok;
  return ok;
}

bool criterion5(std::string& label) {
  bool ok = true;
  for (u64 q : {2ull, 3ull, 5ull}) {
    Loaded g = load(FormFamily::Sp, 2, q);
    for (u32 M : {1u, 2u, 3u}) {
      if (M % factor_u64(q)[0].first == 0) continue;
      check_sp_rank(g, q, 1, M, ok);
    }
  }
  for (u64 q : {2ull, 3ull}) {
    Loaded g = load(FormFamily::Sp, 4, q);  // Sp(4,3) via generator closure
    for (u32 M : {1u, 2u, 3u}) {
      if (M % factor_u64(q)[0].first == 0) continue;
      check_sp_rank(g, q, 2, M, ok);
    }
  }
  label = "symplectic series = oracle at u^1 (q in {2,3,5}) and u^2 (q in {2,3})";
  return ok;
}

bool criterion6(std::string& label) {
  bool ok = true;
  Loaded op = load(FormFamily::Oplus, 2, 3);
  Loaded om = load(FormFamily::Ominus, 2, 3);
  Loaded oo = load(FormFamily::Oodd, 3, 3);
  for (u32 M : {1u, 2u}) {  // M = 3 shares the characteristic with q = 3
    for (auto st : {Statistic::Separable, Statistic::Semisimple, Statistic::Cyclic}) {
      OracleStat os = st == Statistic::Separable    ? OracleStat::Separable
                      : st == Statistic::Semisimple ? OracleStat::Semisimple
                                                    : OracleStat::Cyclic;
      GFRequest r{GroupFamily::O, st, Weighting::Probability, 3, M, 2};
      OrthoTriple t = gf_ortho(r);
      Rat vp = empirical_coefficient(op.table, op.cls, os, M).element_ratio;
      Rat vm = empirical_coefficient(om.table, om.cls, os, M).element_ratio;
      Rat vo = empirical_coefficient(oo.table, oo.cls, os, M).element_ratio;
      if (t.plus.at(1) != vp || t.minus.at(1) != vm || t.zero.at(1) != vo) {
        ok = false;
        std::printf("  ortho M=%u stat=%d mismatch\n", M, static_cast<int>(st));
      }
    }
    GFRequest rr{GroupFamily::O, Statistic::Regular, Weighting::Probability, 3, M, 2};
    OrthoTriple tr = gf_ortho(rr);
    Rat vr = empirical_coefficient(oo.table, oo.cls, OracleStat::Regular, M).element_ratio;
    if (tr.zero.at(1) != vr) {
      ok = false;
      std::printf("  ortho regular M=%u mismatch\n", M);
    }
    // reassembly identities to order 8
    for (auto st : {Statistic::Separable, Statistic::Semisimple, Statistic::Cyclic,
                    Statistic::Regular}) {
      GFRequest r8{GroupFamily::O, st, Weighting::Probability, 3, M, 8};
      OrthoTriple t8 = gf_ortho(r8);
      RationalSeries rhs = ortho_sum_rhs(r8);
      for (int i = 0; i <= 8; ++i) {
        if (2 * i <= rhs.order && rhs.at(2 * i) != t8.plus.at(i) + t8.minus.at(i)) ok = false;
        if (2 * i + 1 <= rhs.order && rhs.at(2 * i + 1) != t8.zero.at(i) * 2) ok = false;
      }
      auto diff = ortho_diff_rhs(r8);
      if (diff && t8.split)
        for (int i = 0; i <= 8 && i <= diff->order; ++i)
          if (diff->at(i) != t8.plus.at(i) - t8.minus.at(i)) ok = false;
    }
  }
  label = "orthogonal triples = oracle at u^1 (q=3, M in {1,2}; M=3 shares char), reassembly to "
          "order 8";
  return ok;
}

// ---- 7: Wall centralizers -----------------------------------------------------

bool criterion7(std::string& label) {
  bool ok = true;
  int compared = 0;
  struct Case {
    FormFamily fam;
    u32 m;
    u64 q;
    GroupFamily ambient;
  };
  for (const Case& c : {Case{FormFamily::Sp, 2, 3, GroupFamily::Sp},
                        Case{FormFamily::Sp, 4, 2, GroupFamily::Sp},
                        Case{FormFamily::Oodd, 3, 3, GroupFamily::O}}) {
    Loaded g = load(c.fam, c.m, c.q);
    for (u64 cid = 0; cid < g.cls.class_count; ++cid) {
      u32 rep = g.cls.class_rep[cid];
      ExtractedDatum ed = extract_wall_datum(g.table, g.table.elements[rep]);
      if (!ed.sign_unambiguous) continue;
      ++compared;
      BigInt wall = centralizer_order_from_data(ed.entries, c.ambient, c.q);
      if (wall != BigInt(g.cls.profiles[rep].centralizer)) {
        ok = false;
        std::printf("  wall mismatch: fam=%d class=%llu wall=%s brute=%llu\n",
                    static_cast<int>(c.fam), static_cast<unsigned long long>(cid),
                    wall.str().c_str(),
                    static_cast<unsigned long long>(g.cls.profiles[rep].centralizer));
      }
    }
  }
  label = "Wall centralizers = brute force on " + std::to_string(compared) +
          " sign-unambiguous classes";
  return ok && compared > 0;
}

// ---- 8: property suites --------------------------------------------------------

bool criterion8(std::string& label) {
  bool ok = true;

  // power image constant on classes, M <= 8, all built groups
  std::vector<std::tuple<FormFamily, u32, u64>> groups{
      {FormFamily::Sp, 2, 2},    {FormFamily::Sp, 2, 3},     {FormFamily::Sp, 2, 5},
      {FormFamily::Sp, 4, 2},    {FormFamily::Oplus, 2, 3},  {FormFamily::Ominus, 2, 3},
      {FormFamily::Oodd, 3, 3},  {FormFamily::Sp, 4, 3}};
  for (auto& [fam, m, q] : groups) {
    Loaded g = load(fam, m, q);
    Field k = g.table.spec.k;
    for (u32 M = 1; M <= 8; ++M) {
      auto img = power_image(g.table, M);
      std::vector<int> class_val(g.cls.class_count, -1);
      for (size_t i = 0; i < g.table.elements.size(); ++i) {
        u32 cid = g.cls.profiles[i].class_id;
        if (class_val[cid] < 0)
          class_val[cid] = img[i];
        else if (class_val[cid] != img[i])
          ok = false;
      }
      // unipotent classes are M-th powers when gcd(M, q) = 1
      if (M % k->p != 0) {
        Poly t1pow = poly_one(k);
        for (u32 j = 0; j < m; ++j) t1pow = poly_mul(t1pow, poly_from(k, {k->neg(1), 1}));
        for (size_t i = 0; i < g.table.elements.size(); ++i)
          if (g.cls.profiles[i].charpoly == t1pow && !img[i]) ok = false;
      }
      // (t+1, m^eps): cyclic -1-potent classes are powers iff M odd (odd q)
      if (q % 2 != 0 && M % k->p != 0) {
        Poly tp1pow = poly_one(k);
        for (u32 j = 0; j < m; ++j) tp1pow = poly_mul(tp1pow, poly_from(k, {1, 1}));
        for (size_t i = 0; i < g.table.elements.size(); ++i) {
          const auto& p = g.cls.profiles[i];
          if (p.charpoly == tp1pow && p.cyclic &&
              static_cast<bool>(img[i]) != (M % 2 == 1))
            ok = false;
        }
      }
    }
  }

  // Lemma 4.1 both directions at small scale: H_{q,n} is exactly
  // (x-1)(x+1 for odd q) times all SRIM of degree 2d, d | n with n/d odd
  for (u64 q : {2ull, 3ull, 5ull}) {
    Field k = field_make(static_cast<u32>(q), 1);
    for (u32 n = 1; n <= 4; ++n) {
      Poly H = poly_xn_minus_1(k, static_cast<u32>(checked_pow_u64(q, n) + 1));
      Poly prod = poly_from(k, {k->neg(1), 1});
      if (q % 2 != 0) prod = poly_mul(prod, poly_from(k, {1, 1}));
      for (u32 d = 1; d <= n; ++d) {
        if (n % d != 0 || (n / d) % 2 == 0) continue;
        for (const Poly& f : srim_enumerate(k, 2 * d)) prod = poly_mul(prod, f);
      }
      if (!(prod == H)) ok = false;
    }
  }

  // Lemma 4.19: spectra determined by (degree, exponent), degrees <= 6
  for (u64 q : {2ull, 3ull, 5ull}) {
    Field k = field_make(static_cast<u32>(q), 1);
    for (u32 M : {2u, 3u}) {
      if (M % q == 0) continue;
      for (u32 deg = 1; deg <= 6; ++deg) {
        std::map<u64, std::vector<u32>> star_by_e;
        for (const Poly& f : countdetail::all_irreducibles(k, deg)) {
          if (f.degree() == 1 && f.c[0] == 0) continue;
          u64 e = exponent_of(f);
          PowerProfile prof = power_profile(f, M);
          auto it = star_by_e.find(e);
          if (it == star_by_e.end())
            star_by_e[e] = prof.star_spectrum;
          else if (it->second != prof.star_spectrum)
            ok = false;
        }
      }
    }
  }

  label = "property suites: class invariance, H_{q,n} splitting, spectrum invariance, "
          "unipotent and -1-potent powers";
  return ok;
}

}  // namespace

int main() {
  struct Entry {
    int idx;
    bool (*fn)(std::string&);
  };
  Entry entries[] = {{1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
                     {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  for (auto& e : entries) {
    Timer t;
    std::string label;
    bool ok = false;
    try {
      ok = e.fn(label);
    } catch (const std::exception& ex) {
      label += std::string(" [exception: ") + ex.what() + "]";
      ok = false;
    }
    report(e.idx, ok, label, t.seconds());
  }
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return failures;
}
