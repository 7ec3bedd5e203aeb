#pragma once

// Scan driver: enumerate a family, compare predictions with the goodness
// oracle, extract and verify witnesses, and re-verify witness files.

#include <algorithm>
#include <chrono>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cppforge/families/enumerate.hpp"
#include "cppforge/scan/witness_io.hpp"

namespace cppforge::scan {

using families::Ranges;
using poly::Poly;
using families::Tag;

enum class Command { FieldInfo, Construct, Classify, Scan, Verify };
enum class Format { Json, Csv };

struct ScanConfig {
  Command command = Command::Scan;
  u64 p = 0;
  unsigned m = 1;
  unsigned n = 0;
  std::optional<Tag> family;
  Ranges ranges;
  u64 bruteForceBound = kDefaultBruteForceBound;
  unsigned workers = 1;
  std::string output;  // empty: stdout
  Format format = Format::Json;
  std::string input;  // verify
};

inline std::string_view commandName(Command c) {
  switch (c) {
    case Command::FieldInfo: return "field-info";
    case Command::Construct: return "construct";
    case Command::Classify: return "classify";
    case Command::Scan: return "scan";
    case Command::Verify: return "verify";
  }
  return "scan";
}

/// "key=v1,v2,a..b" into ranges.
inline void parseRange(Ranges& rg, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) throw Error(Errc::ConfigInvalid, "range '" + spec + "' needs key=values");
  const std::string key = spec.substr(0, eq);
  std::vector<u64> vals;
  std::stringstream ss(spec.substr(eq + 1));
  std::string tok;
  try {
    while (std::getline(ss, tok, ',')) {
      if (const auto dots = tok.find(".."); dots != std::string::npos) {
        const u64 lo = std::stoull(tok.substr(0, dots)), hi = std::stoull(tok.substr(dots + 2));
        if (hi < lo || hi - lo > (u64{1} << 24)) throw Error(Errc::ConfigInvalid, "bad interval '" + tok + "'");
        for (u64 v = lo; v <= hi; ++v) vals.push_back(v);
      } else {
        vals.push_back(std::stoull(tok));
      }
    }
  } catch (const std::logic_error&) {
    throw Error(Errc::ConfigInvalid, "bad range value in '" + spec + "'");
  }
  if (vals.empty()) throw Error(Errc::ConfigInvalid, "range '" + spec + "' is empty");
  auto& dst = rg[key];
  dst.insert(dst.end(), vals.begin(), vals.end());
}

inline void validate(ScanConfig& cfg) {
  if (cfg.workers == 0) throw Error(Errc::ConfigInvalid, "workers must be at least 1");
  if (cfg.bruteForceBound > maxFieldSize()) {
    throw Error(Errc::ConfigInvalid, "brute-force bound exceeds the hard cap 2^" + std::to_string(maxFieldBits()));
  }
  if (cfg.command == Command::Verify) {
    if (cfg.input.empty()) throw Error(Errc::ConfigInvalid, "verify needs a witness file");
    return;
  }
  if (!isPrime(cfg.p)) throw Error(Errc::ConfigInvalid, "p must be prime");
  if (cfg.m == 0) throw Error(Errc::ConfigInvalid, "m must be positive");
  if (cfg.command == Command::FieldInfo) return;
  if (!cfg.family) throw Error(Errc::ConfigInvalid, "a family is required");
  if (*cfg.family == Tag::Deg8) cfg.n = 7;
  if (*cfg.family == Tag::Deg9) cfg.n = 8;
  const bool needsN = *cfg.family == Tag::A1 || *cfg.family == Tag::A2 || *cfg.family == Tag::B;
  if (needsN && cfg.n == 0) throw Error(Errc::ConfigInvalid, "n is required for this family");
}

struct Mismatch {
  json params;
  std::string kind;
  std::string detail;
};

struct ItemSummary {
  json params;
  std::string g;
  bool predictedGood = false;
  bool good = false;
  std::string reason;
};

struct ScanReport {
  json config = json::object();
  struct Counts {
    std::size_t constructed = 0, predictedGood = 0, oracleGood = 0, verifiedCpp = 0, refuted = 0, skipped = 0;
  } counts;
  std::size_t scalarClassCount = 0;
  std::vector<ItemSummary> items;
  std::vector<CppWitness> witnesses;
  std::vector<Mismatch> mismatches;
  std::vector<families::Skip> skips;
  std::vector<std::string> warnings;
  double seconds = 0;

  int exitCode() const { return mismatches.empty() ? 0 : 1; }
};

inline json configToJson(const ScanConfig& c) {
  json rg = json::object();
  for (const auto& [k, v] : c.ranges) rg[k] = v;
  return {{"command", commandName(c.command)},
          {"p", c.p},
          {"m", c.m},
          {"n", c.n},
          {"family", c.family ? std::string(families::tagName(*c.family)) : std::string()},
          {"ranges", rg},
          {"bruteForceBound", c.bruteForceBound},
          {"workers", c.workers}};
}

/// withTiming = false drops timing and the worker count so reports compare across runs.
inline json reportToJson(const ScanReport& r, bool withTiming = true) {
  json j;
  j["config"] = r.config;
  j["counts"] = {{"constructed", r.counts.constructed}, {"predictedGood", r.counts.predictedGood},
                 {"oracleGood", r.counts.oracleGood},   {"verifiedCpp", r.counts.verifiedCpp},
                 {"refuted", r.counts.refuted},         {"skipped", r.counts.skipped}};
  j["scalarClassCount"] = r.scalarClassCount;
  j["items"] = json::array();
  for (const auto& it : r.items) {
    j["items"].push_back({{"params", it.params},
                          {"g", it.g},
                          {"predictedGood", it.predictedGood},
                          {"good", it.good},
                          {"reason", it.reason}});
  }
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(witnessToJson(w));
  j["mismatches"] = json::array();
  for (const auto& m : r.mismatches) j["mismatches"].push_back({{"params", m.params}, {"kind", m.kind}, {"detail", m.detail}});
  j["skips"] = json::array();
  for (const auto& s : r.skips) j["skips"].push_back({{"params", s.params}, {"reason", s.reason}});
  j["warnings"] = r.warnings;
  if (withTiming) {
    j["timing"] = {{"seconds", r.seconds}};
  } else {
    j["config"].erase("workers");
  }
  return j;
}

namespace detail {

struct ItemResult {
  ItemSummary summary;
  std::vector<CppWitness> witnesses;
  std::vector<Mismatch> mismatches;
  std::vector<families::Skip> skips;
};

inline ItemResult processItem(const families::Construction& c, bool extractWitnesses, const ScanConfig& cfg) {
  ItemResult out;
  const auto rep = core::isGood(c.g);
  out.summary = {c.params, c.g.toString(), c.predictedGood, rep.isGood, std::string(core::reasonName(rep.reason))};
  if (rep.isGood != c.predictedGood) {
    out.mismatches.push_back({c.params, "PredictionMismatch",
                              std::string("predicted ") + (c.predictedGood ? "good" : "not good") + ", oracle " +
                                  std::string(core::reasonName(rep.reason))});
  }
  if (c.rootField && rep.isGood && c.predictedGood) {
    if (poly::distinctRootsIn(rep.vg, c.rootField) != c.predictedRoots) {
      out.mismatches.push_back({c.params, "RootMismatch", "predicted roots differ from the roots of v_g"});
    }
  }
  if (!extractWitnesses || !rep.isGood) return out;
  const u64 q = c.field->size();
  const auto topSize = checkedPow(q, c.n, maxFieldSize());
  if (!topSize) {
    out.skips.push_back({c.params, "FieldTooLarge"});
    return out;
  }
  try {
    core::WitnessOptions opt;
    opt.bruteForceBound = cfg.bruteForceBound;
    opt.family = std::string(families::tagName(c.tag));
    opt.params = c.params;
    const gf::Tower t = gf::mkTowerDesc(c.field, c.n);
    out.witnesses = core::witnessesFromGood(c.g, t, opt);
    for (const auto& w : out.witnesses) {
      if (w.verified == core::Verification::Refuted) {
        out.mismatches.push_back({c.params, "Refuted", "b = " + std::to_string(w.b) + " fails the CPP check"});
      }
    }
  } catch (const Error& err) {
    out.skips.push_back({c.params, std::string(errcName(err.code()))});
  }
  return out;
}

/// Runs fn(i) for i in [0, count) over `workers` threads, strided.
template <class Fn>
void parallelFor(std::size_t count, unsigned workers, Fn&& fn) {
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex mu;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard lk(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

inline ScanReport runScan(ScanConfig cfg) {
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.config = configToJson(cfg);
  const FieldPtr F = gf::mkField(cfg.p, cfg.m);
  auto en = families::enumerateFamily(*cfg.family, F, cfg.n, cfg.ranges);
  rep.skips = std::move(en.skips);
  std::vector<detail::ItemResult> results(en.items.size());
  const bool witnesses = cfg.command == Command::Scan;
  detail::parallelFor(en.items.size(), cfg.workers, [&](std::size_t i) {
    results[i] = detail::processItem(en.items[i], witnesses, cfg);
  });
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& r = results[i];
    rep.counts.predictedGood += en.items[i].predictedGood;
    rep.counts.oracleGood += r.summary.good;
    rep.items.push_back(std::move(r.summary));
    for (auto& w : r.witnesses) rep.witnesses.push_back(std::move(w));
    for (auto& m : r.mismatches) rep.mismatches.push_back(std::move(m));
    for (auto& s : r.skips) rep.skips.push_back(std::move(s));
  }
  rep.counts.constructed = en.items.size();
  rep.counts.skipped = rep.skips.size();
  for (const auto& w : rep.witnesses) {
    rep.counts.verifiedCpp += w.verified == core::Verification::BruteForce;
    rep.counts.refuted += w.verified == core::Verification::Refuted;
  }
  rep.scalarClassCount = core::scalarClassCount(rep.witnesses);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Re-check of one witness: brute force within the bound, otherwise the
/// criterion chain (b a root of v_g for the rebuilt family member g).
inline void reverifyWitness(CppWitness w, u64 bound, unsigned workers, ScanReport& rep) {
  const gf::Tower& t = w.tower;
  json id = {{"family", w.family}, {"params", w.params}, {"b", w.b}};
  const u64 N = t.size() - 1;
  if (std::gcd(w.d, N) != 1) {
    rep.mismatches.push_back({id, "GcdViolation", "gcd(d, q^n - 1) != 1"});
    return;
  }
  if (w.d != t.d()) {
    rep.mismatches.push_back({id, "DegreeMismatch", "d != (q^n-1)/(q-1) + 1"});
    return;
  }
  if (w.b == 0) {
    rep.mismatches.push_back({id, "ZeroCoefficient", "b = 0"});
    return;
  }
  if (t.size() <= bound) {
    w.verified = core::isCppMonomial(w.b, t, workers, bound) ? core::Verification::BruteForce
                                                             : core::Verification::Refuted;
    if (w.verified == core::Verification::Refuted) rep.mismatches.push_back({id, "Refuted", "not a CPP"});
    rep.witnesses.push_back(std::move(w));
    return;
  }
  rep.warnings.push_back("F_{q^n} beyond the brute-force bound for b = " + std::to_string(w.b) +
                         "; criterion re-check only");
  // Without a family record there is no exceptional g to check against.
  families::Construction c;
  try {
    c = families::rebuild(families::tagFromName(w.family), t.base, t.n, w.params);
  } catch (const Error& err) {
    rep.skips.push_back({id, "NoFamilyRecord: " + std::string(errcName(err.code()))});
    return;
  }
  const auto good = core::isGood(c.g);
  if (!good.isGood || !c.predictedGood) {
    rep.mismatches.push_back({id, "NotGood", c.predictedGood ? std::string(core::reasonName(good.reason))
                                                             : std::string("family member not predicted good")});
    return;
  }
  if (good.vg.over(t.top).eval(w.b) != 0) {
    rep.mismatches.push_back({id, "NotARoot", "b is not a root of v_g"});
    return;
  }
  w.verified = core::Verification::CriterionOnly;
  rep.witnesses.push_back(std::move(w));
}

inline ScanReport verifyWitnessFile(const std::string& path, u64 bound = kDefaultBruteForceBound, unsigned workers = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.config = {{"command", "verify"}, {"input", path}, {"bruteForceBound", bound}, {"workers", workers}};
  const std::string text = readFile(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] != '{' && text[first] != '[') {
    // CSV: keep going past rows whose field exceeds the cap.
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#' || line.rfind("p,m,n", 0) == 0) continue;
      try {
        reverifyWitness(witnessFromCsvRow(line), bound, workers, rep);
      } catch (const Error& err) {
        if (err.code() != Errc::FieldTooLarge) throw;
        rep.skips.push_back({{"row", line}, "FieldTooLarge"});
      }
    }
  } else {
    for (auto& w : parseWitnesses(text)) reverifyWitness(std::move(w), bound, workers, rep);
  }
  for (const auto& w : rep.witnesses) {
    rep.counts.verifiedCpp += w.verified == core::Verification::BruteForce;
  }
  rep.counts.refuted = static_cast<std::size_t>(
      std::count_if(rep.mismatches.begin(), rep.mismatches.end(), [](const Mismatch& m) { return m.kind == "Refuted"; }));
  rep.counts.skipped = rep.skips.size();
  rep.scalarClassCount = core::scalarClassCount(rep.witnesses);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Field summary for the field-info command.
inline json fieldInfo(u64 p, unsigned m, unsigned n) {
  const FieldPtr F = gf::mkField(p, m);
  json j = {{"p", p}, {"m", m}, {"q", F->size()}, {"modulus", F->modulus()}, {"primitiveElement", F->primitiveElement()},
            {"describe", F->describe()}};
  if (n > 0) {
    const gf::Tower t = gf::mkTowerDesc(F, n);
    j["n"] = n;
    j["extModulus"] = t.top->modulus();
    j["size"] = t.size();
    j["d"] = t.d();
    j["gcdCoprime"] = std::gcd(static_cast<u64>(n) + 1, F->size() - 1) == 1;
    j["outsideHypothesis"] = core::outsideHypothesis(F->size(), n);
  }
  return j;
}

}  // namespace cppforge::scan
