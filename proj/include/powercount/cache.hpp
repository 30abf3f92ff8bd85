#pragma once

// On-disk classification cache: newline-delimited records under a version
// header.  Records are keyed by (q, M, polynomial) and must re-render
// bit-identically, so every field uses a canonical text form.

#include <fstream>
#include <map>
#include <sstream>

#include "powerclass.hpp"

namespace powercount {

inline constexpr const char* kCacheHeader = "powercount-cache v1";

struct CacheRecord {
  u64 q = 0;
  u32 M = 1;
  std::string poly;  // canonical coefficient text, "q=..:c0,c1,..."
  u32 degree = 0;
  u64 exponent = 0;
  bool m_power = false;
  bool mstar_power = false;
  std::vector<u32> spectrum;
  std::vector<u32> degenerate_targets;  // n with is_degenerate(f, M, n)

  std::string render() const {
    std::ostringstream os;
    os << poly << "|M=" << M << "|deg=" << degree << "|exp=" << exponent
       << "|mpower=" << (m_power ? 1 : 0) << "|mstar=" << (mstar_power ? 1 : 0) << "|spectrum=";
    for (size_t i = 0; i < spectrum.size(); ++i) os << (i ? "," : "") << spectrum[i];
    os << "|degen=";
    for (size_t i = 0; i < degenerate_targets.size(); ++i)
      os << (i ? "," : "") << degenerate_targets[i];
    return os.str();
  }

  static CacheRecord parse(const std::string& line) {
    CacheRecord r;
    std::vector<std::string> fields;
    size_t pos = 0;
    while (pos <= line.size()) {
      size_t bar = line.find('|', pos);
      if (bar == std::string::npos) bar = line.size();
      fields.push_back(line.substr(pos, bar - pos));
      pos = bar + 1;
    }
    if (fields.size() != 8) throw ParseError("cache record field count");
    r.poly = fields[0];
    auto num = [](const std::string& s, const char* tag) -> u64 {
      std::string t(tag);
      if (s.rfind(t, 0) != 0) throw ParseError("cache record tag " + t);
      return std::stoull(s.substr(t.size()));
    };
    r.M = static_cast<u32>(num(fields[1], "M="));
    r.degree = static_cast<u32>(num(fields[2], "deg="));
    r.exponent = num(fields[3], "exp=");
    r.m_power = num(fields[4], "mpower=") != 0;
    r.mstar_power = num(fields[5], "mstar=") != 0;
    auto list = [](const std::string& s, const char* tag) {
      std::vector<u32> out;
      std::string body = s.substr(std::string(tag).size());
      size_t p = 0;
      while (p < body.size()) {
        size_t c = body.find(',', p);
        if (c == std::string::npos) c = body.size();
        out.push_back(static_cast<u32>(std::stoul(body.substr(p, c - p))));
        p = c + 1;
      }
      return out;
    };
    if (fields[6].rfind("spectrum=", 0) != 0 || fields[7].rfind("degen=", 0) != 0)
      throw ParseError("cache record spectrum/degen");
    r.spectrum = list(fields[6], "spectrum=");
    r.degenerate_targets = list(fields[7], "degen=");
    Poly f = poly_from_text(r.poly);
    r.q = f.k->q;
    return r;
  }
};

inline CacheRecord classify_to_record(const Poly& f, u32 M) {
  CacheRecord r;
  PowerProfile p = power_profile(f, M);
  r.q = f.k->q;
  r.M = M;
  r.poly = poly_to_text(f);
  r.degree = static_cast<u32>(f.degree());
  r.exponent = exponent_of(f);
  r.m_power = p.is_m_power;
  r.mstar_power = p.is_mstar_power;
  r.spectrum = p.spectrum;
  if (!p.is_m_power) {
    std::set<u32> targets(p.spectrum.begin(), p.spectrum.end());
    for (u32 n : targets) r.degenerate_targets.push_back(n);
  }
  return r;
}

class ClassifyCache {
 public:
  explicit ClassifyCache(std::string path) : path_(std::move(path)) { load(); }

  const CacheRecord* lookup(u64 q, u32 M, const std::string& poly_text) const {
    auto it = records_.find(key(q, M, poly_text));
    return it == records_.end() ? nullptr : &it->second;
  }

  void store(const CacheRecord& r) {
    records_[key(r.q, r.M, r.poly)] = r;
    dirty_ = true;
  }

  void save() {
    if (!dirty_) return;
    std::ofstream os(path_, std::ios::trunc);
    os << kCacheHeader << "\n";
    for (const auto& [k, r] : records_) os << r.render() << "\n";
    dirty_ = false;
  }

  void clear() {
    records_.clear();
    dirty_ = true;
  }

  size_t size() const { return records_.size(); }

  // All records, for integrity verification.
  const std::map<std::string, CacheRecord>& records() const { return records_; }

  bool corrupt() const { return corrupt_; }

 private:
  static std::string key(u64 q, u32 M, const std::string& poly) {
    return std::to_string(q) + "#" + std::to_string(M) + "#" + poly;
  }
  void load() {
    std::ifstream is(path_);
    if (!is) return;
    std::string line;
    if (!std::getline(is, line) || line != kCacheHeader) {
      corrupt_ = true;
      return;
    }
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      try {
        CacheRecord r = CacheRecord::parse(line);
        records_[key(r.q, r.M, r.poly)] = r;
      } catch (const std::exception&) {
        corrupt_ = true;
      }
    }
  }

  std::string path_;
  std::map<std::string, CacheRecord> records_;
  bool dirty_ = false;
  bool corrupt_ = false;
};

}  // namespace powercount
