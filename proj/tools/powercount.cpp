// powercount: exact-arithmetic CLI for power-map classification of
// polynomials over F_q, closed-form counts with enumeration twins, the
// symplectic/orthogonal generating functions, and brute-force verification
// against fully enumerated tiny classical groups.
//
// Exit codes: 0 ok, 2 usage or parse error, 3 bound breach, 4 verification
// mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "powercount/cache.hpp"
#include "powercount/counting.hpp"
#include "powercount/expr.hpp"
#include "powercount/genfun.hpp"
#include "powercount/oracle.hpp"

using json = nlohmann::json;
using namespace powercount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBounds = 3;
constexpr int kExitMismatch = 4;

constexpr const char* kJsonSchema = "powercount/1";

Field field_for_q(u64 q) {
  auto fac = factor_u64(q);
  if (fac.size() != 1) throw ParseError("q must be a prime power");
  return FieldCtx::make(static_cast<u32>(fac[0].first), fac[0].second);
}

CountFamily family_from_name(const std::string& name) {
  if (name == "nstar") return CountFamily::NstarM;
  if (name == "nm") return CountFamily::NM;
  if (name == "nstar-deg") return CountFamily::NstarM_deg;
  if (name == "nm-deg") return CountFamily::NM_deg;
  if (name == "nstar-e") return CountFamily::Nstar_e;
  if (name == "ne") return CountFamily::N_e;
  if (name == "rstar") return CountFamily::Rstar;
  if (name == "rstar-deg") return CountFamily::Rstar_deg;
  if (name == "rstar-e") return CountFamily::Rstar_e;
  throw ParseError("unknown count family: " + name);
}

const char* family_name(CountFamily f) {
  switch (f) {
    case CountFamily::NstarM: return "nstar";
    case CountFamily::NM: return "nm";
    case CountFamily::NstarM_deg: return "nstar-deg";
    case CountFamily::NM_deg: return "nm-deg";
    case CountFamily::Nstar_e: return "nstar-e";
    case CountFamily::N_e: return "ne";
    case CountFamily::Rstar: return "rstar";
    case CountFamily::Rstar_deg: return "rstar-deg";
    case CountFamily::Rstar_e: return "rstar-e";
  }
  return "?";
}

FormulaVariant variant_from_name(const std::string& name) {
  if (name == "fixed") return FormulaVariant::Fixed;
  if (name == "paper") return FormulaVariant::Paper;
  if (name == "proof") return FormulaVariant::Proof;
  throw ParseError("unknown formula variant: " + name);
}

std::string frac_str(const Frac& f) {
  if (f.den == 1) return std::to_string(f.num);
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

json series_json(const RationalSeries& s) {
  json coeffs = json::array();
  for (int i = 0; i <= s.order; ++i)
    coeffs.push_back({{"num", boost::multiprecision::numerator(s.at(i)).str()},
                      {"den", boost::multiprecision::denominator(s.at(i)).str()}});
  return {{"order", s.order}, {"coeffs", coeffs}, {"pretty", series_to_string(s)}};
}

// ---- factor -----------------------------------------------------------------

struct FactorArgs {
  u64 q = 5;
  std::string poly;
  std::string format = "text";
  u64 seed = kFactorSeedDefault;
  u64 bound = u64(1) << 24;
};

int cmd_factor(const FactorArgs& a) {
  Field k = field_for_q(a.q);
  Poly f = parse_poly_input(k, a.poly);
  if (static_cast<u64>(f.degree()) > a.bound) throw BoundExceeded("degree exceeds --bound");
  Factorization fac = factorize(f, a.seed);
  if (a.format == "json") {
    json out{{"schema", kJsonSchema}, {"q", a.q}, {"input", poly_to_text(f)}};
    json arr = json::array();
    for (auto& [p, m] : fac.factors)
      arr.push_back({{"poly", poly_to_text(p)}, {"pretty", poly_to_string(p)}, {"mult", m}});
    out["unit"] = fac.unit;
    out["factors"] = arr;
    std::cout << out.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "poly,pretty,mult\n";
    for (auto& [p, m] : fac.factors)
      std::cout << poly_to_text(p) << "," << poly_to_string(p) << "," << m << "\n";
  } else {
    std::cout << poly_to_string(f) << " over F_" << a.q << " =\n";
    if (fac.unit != 1) std::cout << "  " << fac.unit << "\n";
    for (auto& [p, m] : fac.factors) {
      std::cout << "  (" << poly_to_string(p) << ")";
      if (m > 1) std::cout << "^" << m;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

// ---- classify ---------------------------------------------------------------

struct ClassifyArgs {
  u64 q = 5;
  u32 M = 2;
  std::string poly;
  std::string format = "text";
  bool companion = false;
  u32 degenerate_n = 0;
  bool no_cache = false;
  std::string cache_file = "powercount-cache";
};

int cmd_classify(const ClassifyArgs& a) {
  Field k = field_for_q(a.q);
  Poly f = parse_poly_input(k, a.poly);
  std::string key = poly_to_text(f);
  CacheRecord rec;
  if (!a.no_cache) {
    ClassifyCache cache(a.cache_file);
    if (const CacheRecord* hit = cache.lookup(a.q, a.M, key)) {
      rec = *hit;
    } else {
      rec = classify_to_record(f, a.M);
      cache.store(rec);
      cache.save();
    }
  } else {
    rec = classify_to_record(f, a.M);
  }
  if (a.format == "json") {
    json out{{"schema", kJsonSchema},
             {"poly", rec.poly},
             {"pretty", poly_to_string(f)},
             {"q", a.q},
             {"M", a.M},
             {"degree", rec.degree},
             {"exponent", rec.exponent},
             {"m_power", rec.m_power},
             {"mstar_power", rec.mstar_power},
             {"spectrum", rec.spectrum},
             {"degenerate_targets", rec.degenerate_targets}};
    if (a.companion) {
      Factorization cf = companion_power_charpoly(f, a.M);
      json arr = json::array();
      for (auto& [p, m] : cf.factors)
        arr.push_back({{"poly", poly_to_text(p)}, {"pretty", poly_to_string(p)}, {"mult", m}});
      out["companion_power_charpoly"] = arr;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << poly_to_string(f) << " over F_" << a.q << ", M = " << a.M << "\n";
    std::cout << "  degree:   " << rec.degree << "\n";
    std::cout << "  exponent: " << rec.exponent << "\n";
    std::cout << "  M-power:  " << (rec.m_power ? "yes" : "no") << "\n";
    std::cout << "  M*-power: " << (rec.mstar_power ? "yes" : "no") << "\n";
    std::cout << "  spectrum:";
    for (u32 d : rec.spectrum) std::cout << " " << d;
    std::cout << "\n";
    if (a.degenerate_n) {
      bool deg = !rec.m_power &&
                 std::find(rec.degenerate_targets.begin(), rec.degenerate_targets.end(),
                           a.degenerate_n) != rec.degenerate_targets.end();
      std::cout << "  degenerate(M," << a.degenerate_n << "," << rec.degree
                << "): " << (deg ? "yes" : "no") << "\n";
    }
    if (a.companion) {
      Factorization cf = companion_power_charpoly(f, a.M);
      std::cout << "  charpoly(C_f^" << a.M << ") =";
      for (auto& [p, m] : cf.factors) {
        std::cout << " (" << poly_to_string(p) << ")";
        if (m > 1) std::cout << "^" << m;
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

// ---- count ------------------------------------------------------------------

struct CountArgs {
  std::string family = "nstar";
  u64 q = 5;
  u32 M = 1;
  u32 deg = 4;
  u32 k = 1;
  u64 e = 0;
  bool verify = false;
  bool grid = false;
  std::string variant = "fixed";
  std::string format = "text";
};

int count_one(const CountQuery& query, FormulaVariant v, bool verify, bool text_row,
              bool& any_mismatch) {
  Frac closed = count_closed_variant(query, v);
  std::string line = std::string(family_name(query.family)) + " q=" + std::to_string(query.q) +
                     " M=" + std::to_string(query.M) + " deg=" + std::to_string(query.deg);
  if (query.family == CountFamily::NstarM_deg || query.family == CountFamily::NM_deg ||
      query.family == CountFamily::Rstar_deg)
    line += " k=" + std::to_string(query.k);
  if (query.family == CountFamily::Nstar_e || query.family == CountFamily::N_e ||
      query.family == CountFamily::Rstar_e)
    line += " e=" + std::to_string(query.e);
  line += " closed=" + frac_str(closed);
  if (verify) {
    u64 twin = enumerate_count(query);
    bool ok = closed.integral() && closed.num >= 0 && static_cast<u64>(closed.num) == twin;
    line += " twin=" + std::to_string(twin) + (ok ? " OK" : " MISMATCH");
    if (!ok) any_mismatch = true;
  }
  if (text_row) std::cout << line << "\n";
  return kExitOk;
}

int cmd_count(const CountArgs& a) {
  FormulaVariant v = variant_from_name(a.variant);
  bool mismatch = false;
  if (!a.grid) {
    CountQuery query{a.q, a.M, a.deg, a.k, a.e, family_from_name(a.family)};
    count_one(query, v, a.verify, true, mismatch);
    return mismatch ? kExitMismatch : kExitOk;
  }
  // the verification grid: q in {2,3,5}, gcd(M, q) = 1, M in 1..5,
  // SRIM degrees <= 12 and plain degrees <= 8, all families
  for (u64 q : {2ull, 3ull, 5ull}) {
    for (u32 M = 1; M <= 5; ++M) {
      if (M % factor_u64(q)[0].first == 0) continue;
      for (u32 two_k = 2; two_k <= 12; two_k += 2)
        count_one({q, M, two_k, 1, 0, CountFamily::NstarM}, v, true, true, mismatch);
      for (u32 k = 1; k <= 8; ++k) {
        count_one({q, M, k, 1, 0, CountFamily::NM}, v, true, true, mismatch);
        count_one({q, M, 2 * k, 1, 0, CountFamily::Rstar}, v, true, true, mismatch);
      }
      for (u32 two_n = 2; two_n <= 12; two_n += 2)
        for (u32 k = 1; k <= two_n / 2; k += 2) {
          if ((two_n / 2) % k) continue;
          count_one({q, M, two_n, k, 0, CountFamily::NstarM_deg}, v, true, true, mismatch);
        }
      for (u32 n = 1; n <= 8; ++n)
        for (u32 k = 1; k <= n; ++k) {
          if (n % k) continue;
          count_one({q, M, n, k, 0, CountFamily::NM_deg}, v, true, true, mismatch);
          count_one({q, M, 2 * n, k, 0, CountFamily::Rstar_deg}, v, true, true, mismatch);
        }
      for (u32 two_n = 2; two_n <= 12; two_n += 2)
        for (u64 e : divisors_u64(checked_pow_u64(q, two_n / 2) + 1))
          count_one({q, M, two_n, 1, e, CountFamily::Nstar_e}, v, true, true, mismatch);
      for (u32 n = 1; n <= 8; ++n)
        for (u64 e : divisors_u64(checked_pow_u64(q, n) - 1)) {
          count_one({q, M, n, 1, e, CountFamily::N_e}, v, true, true, mismatch);
          count_one({q, M, 2 * n, 1, e, CountFamily::Rstar_e}, v, true, true, mismatch);
        }
    }
  }
  std::cout << (mismatch ? "GRID: mismatches found\n" : "GRID: all counts match\n");
  return mismatch ? kExitMismatch : kExitOk;
}

// ---- series -----------------------------------------------------------------

struct SeriesArgs {
  std::string group = "sp";
  std::string stat = "separable";
  std::string weight = "prob";
  u64 q = 3;
  u32 M = 1;
  int order = 8;
  std::string format = "text";
};

Statistic stat_from_name(const std::string& s) {
  if (s == "separable") return Statistic::Separable;
  if (s == "semisimple") return Statistic::Semisimple;
  if (s == "cyclic") return Statistic::Cyclic;
  if (s == "regular") return Statistic::Regular;
  throw ParseError("unknown statistic: " + s);
}

int cmd_series(const SeriesArgs& a) {
  GFRequest req;
  req.family = (a.group == "sp") ? GroupFamily::Sp : GroupFamily::O;
  if (a.group != "sp" && a.group != "o") throw ParseError("group must be sp or o");
  req.stat = stat_from_name(a.stat);
  if (a.weight == "classes")
    req.weight = Weighting::Classes;
  else if (a.weight == "prob")
    req.weight = Weighting::Probability;
  else
    throw ParseError("weight must be classes or prob");
  req.q = a.q;
  req.M = a.M;
  req.order = a.order;
  if (req.family == GroupFamily::Sp) {
    RationalSeries s = gf_sp(req);
    if (a.format == "json") {
      json out{{"schema", kJsonSchema}, {"group", "sp"},   {"stat", a.stat},
               {"weight", a.weight},    {"q", a.q},        {"M", a.M},
               {"series", series_json(s)}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << series_to_string(s) << "\n";
    }
  } else {
    OrthoTriple t = gf_ortho(req);
    if (a.format == "json") {
      json out{{"schema", kJsonSchema}, {"group", "o"}, {"stat", a.stat},
               {"weight", a.weight},    {"q", a.q},     {"M", a.M},
               {"split", t.split}};
      out["plus"] = series_json(t.plus);
      out["minus"] = series_json(t.minus);
      out["zero"] = series_json(t.zero);
      std::cout << out.dump(2) << "\n";
    } else {
      if (t.split) {
        std::cout << "O+ : " << series_to_string(t.plus) << "\n";
        std::cout << "O- : " << series_to_string(t.minus) << "\n";
      } else {
        std::cout << "O+ and O- combined (no difference equation): "
                  << series_to_string(t.plus) << "\n";
      }
      std::cout << "O0 : " << series_to_string(t.zero) << "\n";
    }
  }
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  u64 q = 3;
  std::vector<u32> Ms;
  u32 max_rank = 1;
  bool with_ortho = true;
  bool no_cache = false;
  std::string cache_file = "powercount-cache";
};

struct VerifyOutcome {
  int checks = 0;
  int failures = 0;
};

void verify_group(const GroupTable& table, const ClassifiedGroup& cls, GroupFamily fam,
                  FormFamily form, u32 rank, u64 q, u32 M, VerifyOutcome& out) {
  for (auto st : {Statistic::Separable, Statistic::Semisimple, Statistic::Cyclic,
                  Statistic::Regular}) {
    OracleStat os = st == Statistic::Separable    ? OracleStat::Separable
                    : st == Statistic::Semisimple ? OracleStat::Semisimple
                    : st == Statistic::Cyclic     ? OracleStat::Cyclic
                                                  : OracleStat::Regular;
    if (os == OracleStat::Regular && (fam == GroupFamily::Sp || q % 2 == 0)) continue;
    EmpiricalValue ev = empirical_coefficient(table, cls, os, M);
    const char* stname = st == Statistic::Separable    ? "separable"
                         : st == Statistic::Semisimple ? "semisimple"
                         : st == Statistic::Cyclic     ? "cyclic"
                                                       : "regular";
    GFRequest req{fam, st, Weighting::Probability, q, M, static_cast<int>(rank)};
    Rat gf_val;
    Rat gfc_val;
    bool have_classes = false;
    if (fam == GroupFamily::Sp) {
      gf_val = gf_sp(req).at(static_cast<int>(rank));
      GFRequest reqc = req;
      reqc.weight = Weighting::Classes;
      gfc_val = gf_sp(reqc).at(static_cast<int>(rank));
      have_classes = true;
    } else {
      OrthoTriple t = gf_ortho(req);
      gf_val = (form == FormFamily::Oplus)    ? t.plus.at(static_cast<int>(rank))
               : (form == FormFamily::Ominus) ? t.minus.at(static_cast<int>(rank))
                                              : t.zero.at(static_cast<int>(rank));
      if (!t.split && form != FormFamily::Oodd) continue;  // no separated series
      if (st == Statistic::Separable) {
        GFRequest reqc = req;
        reqc.weight = Weighting::Classes;
        OrthoTriple tc = gf_ortho(reqc);
        gfc_val = (form == FormFamily::Oplus)    ? tc.plus.at(static_cast<int>(rank))
                  : (form == FormFamily::Ominus) ? tc.minus.at(static_cast<int>(rank))
                                                 : tc.zero.at(static_cast<int>(rank));
        have_classes = true;
      }
    }
    const char* gname = form == FormFamily::Sp       ? "Sp"
                        : form == FormFamily::Oplus  ? "O+"
                        : form == FormFamily::Ominus ? "O-"
                                                     : "O0";
    bool ok = (gf_val == ev.element_ratio);
    ++out.checks;
    if (!ok) ++out.failures;
    std::cout << (ok ? "PASS" : "FAIL") << " " << gname << "(" << table.spec.m << ","
              << q << ") " << stname << " M=" << M << " u^" << rank
              << " series=" << rat_to_string(gf_val)
              << " oracle=" << rat_to_string(ev.element_ratio) << "\n";
    if (have_classes) {
      bool okc = (gfc_val == Rat(BigInt(ev.class_matching)));
      ++out.checks;
      if (!okc) ++out.failures;
      std::cout << (okc ? "PASS" : "FAIL") << " " << gname << "(" << table.spec.m << ","
                << q << ") c-" << stname << " M=" << M << " u^" << rank
                << " series=" << rat_to_string(gfc_val)
                << " oracle=" << ev.class_matching << "\n";
    }
  }
}

int cmd_verify(const VerifyArgs& a) {
  VerifyOutcome out;
  std::vector<u32> Ms = a.Ms;
  if (Ms.empty()) Ms = {1, 2, 3};
  // cache integrity first: every record must equal recomputation
  if (!a.no_cache) {
    ClassifyCache cache(a.cache_file);
    if (cache.corrupt()) {
      std::cout << "FAIL cache: corrupted or unreadable records in " << a.cache_file << "\n";
      return kExitMismatch;
    }
    for (const auto& [key, rec] : cache.records()) {
      Poly f = poly_from_text(rec.poly);
      CacheRecord fresh = classify_to_record(f, rec.M);
      ++out.checks;
      if (fresh.render() != rec.render()) {
        ++out.failures;
        std::cout << "FAIL cache record " << rec.poly << " M=" << rec.M
                  << ": stored != recomputed\n";
      }
    }
  }
  u32 p = static_cast<u32>(factor_u64(a.q)[0].first);
  for (u32 rank = 1; rank <= a.max_rank; ++rank) {
    auto sp = build_group(make_form(FormFamily::Sp, 2 * rank, a.q));
    auto cls = classify_group(sp);
    for (u32 M : Ms) {
      if (M % p == 0) continue;
      verify_group(sp, cls, GroupFamily::Sp, FormFamily::Sp, rank, a.q, M, out);
    }
  }
  if (a.with_ortho && a.q % 2 != 0) {
    auto op = build_group(make_form(FormFamily::Oplus, 2, a.q));
    auto com = classify_group(op);
    auto om = build_group(make_form(FormFamily::Ominus, 2, a.q));
    auto cmm = classify_group(om);
    auto oo = build_group(make_form(FormFamily::Oodd, 3, a.q));
    auto coo = classify_group(oo);
    for (u32 M : Ms) {
      if (M % p == 0) continue;
      verify_group(op, com, GroupFamily::O, FormFamily::Oplus, 1, a.q, M, out);
      verify_group(om, cmm, GroupFamily::O, FormFamily::Ominus, 1, a.q, M, out);
      verify_group(oo, coo, GroupFamily::O, FormFamily::Oodd, 1, a.q, M, out);
    }
  }
  std::cout << out.checks << " checks, " << out.failures << " failures\n";
  return out.failures ? kExitMismatch : kExitOk;
}

// ---- enumerate / cache ------------------------------------------------------

struct EnumArgs {
  std::string family = "nstar";
  u64 q = 5;
  u32 M = 1;
  u32 deg = 4;
  u32 k = 1;
  u64 e = 0;
  bool list = false;
};

int cmd_enumerate(const EnumArgs& a) {
  CountQuery query{a.q, a.M, a.deg, a.k, a.e, family_from_name(a.family)};
  u64 n = enumerate_count(query);
  std::cout << family_name(query.family) << " q=" << a.q << " M=" << a.M << " deg=" << a.deg
            << " enumerated=" << n << "\n";
  if (a.list && query.family == CountFamily::NstarM) {
    Field kf = field_for_q(a.q);
    for (const Poly& f : srim_enumerate(kf, a.deg)) std::cout << "  " << poly_to_string(f) << "\n";
  }
  return kExitOk;
}

struct CacheArgs {
  std::string cache_file = "powercount-cache";
  bool clear = false;
};

int cmd_cache(const CacheArgs& a) {
  ClassifyCache cache(a.cache_file);
  if (a.clear) {
    cache.clear();
    cache.save();
    std::cout << "cache cleared\n";
    return kExitOk;
  }
  if (cache.corrupt()) {
    std::cout << "cache: CORRUPT\n";
    return kExitMismatch;
  }
  std::cout << "records: " << cache.size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"powercount: M-th powers in finite symplectic and orthogonal groups"};
  app.require_subcommand(1);

  FactorArgs fa;
  auto* factor = app.add_subcommand("factor", "factor a polynomial over F_q");
  factor->add_option("--q", fa.q, "field size (prime power)");
  factor->add_option("--poly", fa.poly, "polynomial (expression or q=..:c0,c1form)")->required();
  factor->add_option("--format", fa.format, "text|json|csv");
  factor->add_option("--seed", fa.seed, "equal-degree splitting seed");
  factor->add_option("--bound", fa.bound, "degree bound");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "M-power classification of a polynomial");
  classify->add_option("--q", ca.q, "field size");
  classify->add_option("--M", ca.M, "power exponent");
  classify->add_option("--poly", ca.poly, "polynomial")->required();
  classify->add_option("--format", ca.format, "text|json");
  classify->add_flag("--companion", ca.companion, "also print charpoly(C_f^M) factored");
  classify->add_option("--degenerate-n", ca.degenerate_n, "report is_degenerate for this n");
  classify->add_flag("--no-cache", ca.no_cache, "bypass the on-disk cache");
  classify->add_option("--cache-file", ca.cache_file, "cache path");

  CountArgs ta;
  auto* count = app.add_subcommand("count", "closed-form counts, optionally vs enumeration");
  count->add_option("--family", ta.family,
                    "nstar|nm|nstar-deg|nm-deg|nstar-e|ne|rstar|rstar-deg|rstar-e");
  count->add_option("--q", ta.q, "field size");
  count->add_option("--M", ta.M, "power exponent");
  count->add_option("--deg", ta.deg, "degree parameter (2k, k, 2n or n per family)");
  count->add_option("--k", ta.k, "divisor parameter of the degenerate families");
  count->add_option("--e", ta.e, "exponent parameter of the _e families");
  count->add_flag("--verify", ta.verify, "compare against the enumeration twin");
  count->add_flag("--grid", ta.grid, "run the full verification grid");
  count->add_option("--formula-variant", ta.variant, "fixed|paper|proof");
  count->add_option("--format", ta.format, "text");

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "generating function coefficients");
  series->add_option("--group", sa.group, "sp|o");
  series->add_option("--stat", sa.stat, "separable|semisimple|cyclic|regular");
  series->add_option("--weight", sa.weight, "classes|prob");
  series->add_option("--q", sa.q, "field size");
  series->add_option("--M", sa.M, "power exponent");
  series->add_option("--order", sa.order, "truncation order");
  series->add_option("--format", sa.format, "text|json");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "series vs brute-force oracle");
  verify->add_option("--q", va.q, "field size");
  verify->add_option("--M", va.Ms, "power exponents (repeatable)");
  verify->add_option("--max-rank", va.max_rank, "check u^1..u^rank (Sp(2r,q))");
  verify->add_flag("--no-ortho", [&va](size_t) { va.with_ortho = false; },
                   "skip orthogonal groups");
  verify->add_flag("--no-cache", va.no_cache, "skip cache integrity check");
  verify->add_option("--cache-file", va.cache_file, "cache path");

  EnumArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "enumeration twin counts");
  enumerate->add_option("--family", ea.family, "count family");
  enumerate->add_option("--q", ea.q, "field size");
  enumerate->add_option("--M", ea.M, "power exponent");
  enumerate->add_option("--deg", ea.deg, "degree parameter");
  enumerate->add_option("--k", ea.k, "divisor parameter");
  enumerate->add_option("--e", ea.e, "exponent parameter");
  enumerate->add_flag("--list", ea.list, "list the polynomials (nstar family)");

  CacheArgs cha;
  auto* cachecmd = app.add_subcommand("cache", "inspect or clear the classification cache");
  cachecmd->add_option("--cache-file", cha.cache_file, "cache path");
  cachecmd->add_flag("--clear", cha.clear, "remove all records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*factor) return cmd_factor(fa);
    if (*classify) return cmd_classify(ca);
    if (*count) return cmd_count(ta);
    if (*series) return cmd_series(sa);
    if (*verify) return cmd_verify(va);
    if (*enumerate) return cmd_enumerate(ea);
    if (*cachecmd) return cmd_cache(cha);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBounds;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CtxMismatch& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
