#include <catch_amalgamated.hpp>

#include <set>

#include "powercount/oracle.hpp"

using namespace powercount;

namespace {

struct Loaded {
  GroupTable table;
  ClassifiedGroup cls;
};

const Loaded& load(FormFamily fam, u32 m, u64 q) {
  static std::map<std::tuple<int, u32, u64>, Loaded> memo;
  auto key = std::make_tuple(static_cast<int>(fam), m, q);
  auto it = memo.find(key);
  if (it == memo.end()) {
    GroupTable t = build_group(make_form(fam, m, q));
    ClassifiedGroup c = classify_group(t);
    it = memo.emplace(key, Loaded{std::move(t), std::move(c)}).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("group construction and orders") {
  CHECK(load(FormFamily::Sp, 2, 2).table.order == 6);
  CHECK(load(FormFamily::Sp, 2, 3).table.order == 24);
  CHECK(load(FormFamily::Oodd, 3, 3).table.order == 48);
  CHECK(load(FormFamily::Oplus, 2, 3).table.order == 4);
  CHECK(load(FormFamily::Ominus, 2, 3).table.order == 8);
  CHECK(load(FormFamily::Sp, 4, 2).table.order == 720);
  // even-q orthogonal groups via the quadratic forms
  CHECK(load(FormFamily::Oplus, 2, 2).table.order == 2);
  CHECK(load(FormFamily::Ominus, 2, 2).table.order == 6);
  CHECK(load(FormFamily::Oodd, 3, 2).table.order == 6);
  // order always matches the closed-form group order
  for (auto& [fam, m, q] : std::vector<std::tuple<FormFamily, u32, u64>>{
           {FormFamily::Sp, 2, 5}, {FormFamily::Oplus, 4, 3}}) {
    const Loaded& l = load(fam, m, q);
    CHECK(BigInt(l.table.order) == group_order(form_group_kind(fam), m, q));
  }
}

TEST_CASE("every stored element preserves the form") {
  for (auto& [fam, m, q] : std::vector<std::tuple<FormFamily, u32, u64>>{
           {FormFamily::Sp, 2, 3}, {FormFamily::Oodd, 3, 3}, {FormFamily::Ominus, 2, 2}}) {
    const Loaded& l = load(fam, m, q);
    for (const Mat& a : l.table.elements) CHECK(preserves_form(l.table.spec, a));
  }
}

TEST_CASE("classification of Sp(2,3) elements") {
  const Loaded& l = load(FormFamily::Sp, 2, 3);
  Field f3 = l.table.spec.k;
  u32 id = l.table.find(Mat::identity(2));
  const ElementProfile& pid = l.cls.profiles[id];
  CHECK(pid.semisimple);
  CHECK_FALSE(pid.separable);
  CHECK_FALSE(pid.cyclic);
  CHECK(pid.minpoly == poly_from(f3, {2, 1}));

  Mat minus = Mat::identity(2);
  minus.at(0, 0) = minus.at(1, 1) = f3->neg(1);
  const ElementProfile& pm = l.cls.profiles[l.table.find(minus)];
  CHECK(pm.semisimple);
  CHECK_FALSE(pm.cyclic);

  // order-4 elements have charpoly t^2 + 1: separable and cyclic
  int found = 0;
  for (size_t i = 0; i < l.table.elements.size(); ++i) {
    if (l.cls.profiles[i].charpoly == poly_from(f3, {1, 0, 1})) {
      ++found;
      CHECK(l.cls.profiles[i].separable);
      CHECK(l.cls.profiles[i].cyclic);
      CHECK(l.cls.profiles[i].centralizer == 4);  // q + 1, Lemma 3.6
    }
  }
  CHECK(found == 6);
}

TEST_CASE("conjugacy partitions") {
  const Loaded& s3 = load(FormFamily::Sp, 2, 2);
  std::multiset<u64> sizes(s3.cls.class_size.begin(), s3.cls.class_size.end());
  CHECK(sizes == std::multiset<u64>{1, 2, 3});

  const Loaded& l = load(FormFamily::Sp, 2, 3);
  CHECK(l.cls.class_count == 7);
  u64 total = 0;
  for (u64 s : l.cls.class_size) total += s;
  CHECK(total == 24);
  for (size_t i = 0; i < l.table.elements.size(); ++i)
    CHECK(l.cls.profiles[i].class_size * l.cls.profiles[i].centralizer == l.table.order);
}

TEST_CASE("power image properties") {
  const Loaded& l = load(FormFamily::Sp, 2, 3);
  auto img1 = power_image(l.table, 1);
  for (char v : img1) CHECK(v == 1);

  // M = 2 image equals the direct set of squares
  auto img2 = power_image(l.table, 2);
  std::set<u32> squares;
  for (const Mat& a : l.table.elements)
    squares.insert(l.table.find(mat_mul(l.table.spec.k, a, a)));
  for (size_t i = 0; i < img2.size(); ++i)
    CHECK(static_cast<bool>(img2[i]) == (squares.count(static_cast<u32>(i)) > 0));

  // class invariance for all M <= 8, several groups
  for (auto& [fam, m, q] : std::vector<std::tuple<FormFamily, u32, u64>>{
           {FormFamily::Sp, 2, 2},
           {FormFamily::Sp, 2, 3},
           {FormFamily::Sp, 2, 5},
           {FormFamily::Sp, 4, 2},
           {FormFamily::Oplus, 2, 3},
           {FormFamily::Ominus, 2, 3},
           {FormFamily::Oodd, 3, 3}}) {
    const Loaded& g = load(fam, m, q);
    for (u32 M = 1; M <= 8; ++M) {
      auto img = power_image(g.table, M);
      for (u64 cid = 0; cid < g.cls.class_count; ++cid) {
        int seen = -1;
        for (size_t i = 0; i < g.table.elements.size(); ++i) {
          if (g.cls.profiles[i].class_id != cid) continue;
          if (seen < 0)
            seen = img[i];
          else
            REQUIRE(seen == img[i]);
        }
      }
    }
  }
}

TEST_CASE("unipotent classes are M-th powers when gcd(M, q) = 1") {
  for (auto& [fam, m, q] : std::vector<std::tuple<FormFamily, u32, u64>>{
           {FormFamily::Sp, 2, 3}, {FormFamily::Sp, 4, 2}, {FormFamily::Oodd, 3, 3}}) {
    const Loaded& g = load(fam, m, q);
    Field k = g.table.spec.k;
    for (u32 M = 1; M <= 8; ++M) {
      if (M % k->p == 0) continue;
      auto img = power_image(g.table, M);
      for (size_t i = 0; i < g.table.elements.size(); ++i) {
        // unipotent: charpoly (t-1)^m
        Poly expect{k, std::vector<u64>(m + 1, 0)};
        bool unip = true;
        Poly cp = g.cls.profiles[i].charpoly;
        Poly t1 = poly_from(k, {k->neg(1), 1});
        Poly pow = poly_one(k);
        for (u32 j = 0; j < m; ++j) pow = poly_mul(pow, t1);
        unip = (cp == pow);
        if (unip) CHECK(img[i] == 1);
      }
    }
  }
}

TEST_CASE("SRIM charpoly elements are M-th powers iff the charpoly is M*-power") {
  for (auto& [fam, m, q] : std::vector<std::tuple<FormFamily, u32, u64>>{
           {FormFamily::Sp, 2, 2}, {FormFamily::Sp, 2, 3}, {FormFamily::Sp, 2, 5},
           {FormFamily::Sp, 4, 2}}) {
    const Loaded& g = load(fam, m, q);
    for (u32 M : {2u, 3u, 5u}) {
      if (M % g.table.spec.k->p == 0) continue;
      auto img = power_image(g.table, M);
      for (size_t i = 0; i < g.table.elements.size(); ++i) {
        const Poly& cp = g.cls.profiles[i].charpoly;
        if (static_cast<u32>(cp.degree()) != m || !is_srim(cp)) continue;
        PowerProfile prof = power_profile(cp, M);
        CHECK(static_cast<bool>(img[i]) == prof.is_mstar_power);
      }
    }
  }
}

TEST_CASE("(t+1, m^+-) classes are M-th powers iff M is odd") {
  const Loaded& g = load(FormFamily::Sp, 2, 3);
  Field k = g.table.spec.k;
  Poly tp1sq = poly_mul(poly_from(k, {1, 1}), poly_from(k, {1, 1}));
  for (u32 M = 1; M <= 8; ++M) {
    if (M % 3 == 0) continue;
    auto img = power_image(g.table, M);
    bool exercised = false;
    for (size_t i = 0; i < g.table.elements.size(); ++i) {
      const auto& p = g.cls.profiles[i];
      if (p.charpoly == tp1sq && p.cyclic) {
        exercised = true;
        CHECK(static_cast<bool>(img[i]) == (M % 2 == 1));
      }
    }
    CHECK(exercised);
  }
}

TEST_CASE("empirical coefficients") {
  const Loaded& s3 = load(FormFamily::Sp, 2, 2);
  auto ev = empirical_coefficient(s3.table, s3.cls, OracleStat::Separable, 1);
  CHECK(ev.element_ratio == Rat(1, 3));  // the two 3-cycles of S_3
  CHECK(ev.class_total == 3);

  const Loaded& l = load(FormFamily::Sp, 2, 3);
  auto ec = empirical_coefficient(l.table, l.cls, OracleStat::Cyclic, 2);
  GFRequest r{GroupFamily::Sp, Statistic::Cyclic, Weighting::Probability, 3, 2, 2};
  CHECK(gf_sp(r).at(1) == ec.element_ratio);

  // M = 1 equals the plain proportion for every statistic
  for (auto st : {OracleStat::Separable, OracleStat::Semisimple, OracleStat::Cyclic}) {
    auto e1 = empirical_coefficient(l.table, l.cls, st, 1);
    u64 plain = 0;
    for (size_t i = 0; i < l.table.elements.size(); ++i) {
      const auto& p = l.cls.profiles[i];
      bool has = st == OracleStat::Separable    ? p.separable
                 : st == OracleStat::Semisimple ? p.semisimple
                                                : p.cyclic;
      if (has) ++plain;
    }
    CHECK(e1.element_ratio == Rat(BigInt(plain), BigInt(l.table.order)));
  }
}

TEST_CASE("M = 1 series degeneration against the oracle") {
  for (u64 q : {2ull, 3ull}) {
    for (u32 rank : {1u, 2u}) {
      const Loaded& g = load(FormFamily::Sp, 2 * rank, q);
      auto ev = empirical_coefficient(g.table, g.cls, OracleStat::Separable, 1);
      GFRequest r{GroupFamily::Sp, Statistic::Separable, Weighting::Probability, q, 1,
                  static_cast<int>(rank)};
      CHECK(gf_sp(r).at(static_cast<int>(rank)) == ev.element_ratio);
    }
  }
}

TEST_CASE("Wall centralizer formula against brute force") {
  struct Case {
    FormFamily fam;
    u32 m;
    u64 q;
    GroupFamily ambient;
  };
  for (const Case& c : {Case{FormFamily::Sp, 2, 3, GroupFamily::Sp},
                        Case{FormFamily::Sp, 4, 2, GroupFamily::Sp},
                        Case{FormFamily::Oodd, 3, 3, GroupFamily::O}}) {
    const Loaded& g = load(c.fam, c.m, c.q);
    int compared = 0;
    for (u64 cid = 0; cid < g.cls.class_count; ++cid) {
      u32 rep = g.cls.class_rep[cid];
      ExtractedDatum ed = extract_wall_datum(g.table, g.table.elements[rep]);
      if (!ed.sign_unambiguous) continue;
      ++compared;
      BigInt wall = centralizer_order_from_data(ed.entries, c.ambient, c.q);
      CHECK(wall == BigInt(g.cls.profiles[rep].centralizer));
    }
    CHECK(compared > 0);
  }
}

TEST_CASE("even-q orthogonal groups leave regular unclassified") {
  const Loaded& g = load(FormFamily::Ominus, 2, 2);
  bool any_unknown = false;
  for (const auto& p : g.cls.profiles)
    if (p.regular < 0) any_unknown = true;
  CHECK(any_unknown);
  CHECK_THROWS_AS(empirical_coefficient(g.table, g.cls, OracleStat::Regular, 1), Error);
}

TEST_CASE("CSV snapshot shape") {
  const Loaded& g = load(FormFamily::Sp, 2, 2);
  std::string csv = export_csv(g.table, g.cls, {1, 2});
  size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == g.table.order + 1);
  CHECK(csv.rfind("index,charpoly,minpoly,", 0) == 0);
}
