#pragma once

// Witness records as JSON objects and CSV rows.
// CSV cells hold field elements as base-p integers of their coefficient
// vectors (constant term least significant); moduli are ';'-joined lists.

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cppforge/core/witness.hpp"
#include "cppforge/gf/construct.hpp"

namespace cppforge::scan {

using json = nlohmann::json;
using core::CppWitness;
using gf::Code;
using gf::FieldPtr;

/// Modulus of F_q over F_p as digits; a prime field reports {0, 1}.
inline std::vector<Code> baseModulus(const gf::Field& Fq) { return Fq.modulus(); }

inline json witnessToJson(const CppWitness& w) {
  const auto& t = w.tower;
  return {{"p", t.base->characteristic()},
          {"m", t.base->absDegree()},
          {"n", t.n},
          {"modulus", baseModulus(*t.base)},
          {"extModulus", t.top->modulus()},
          {"d", w.d},
          {"b", t.top->toBaseCoeffs(w.b)},
          {"family", w.family},
          {"params", w.params},
          {"verified", core::verificationName(w.verified)},
          {"outsideHypothesis", w.outsideHypothesis}};
}

namespace detail {

inline gf::Tower towerFromModuli(u64 p, const std::vector<Code>& modulus, const std::vector<Code>& extModulus) {
  if (!isPrime(p)) throw Error(Errc::ParseError, "p = " + std::to_string(p) + " is not prime");
  if (extModulus.size() < 2) throw Error(Errc::ParseError, "extension modulus too short");
  if (auto bits = checkedPow(p, static_cast<unsigned>((modulus.size() - 1) * (extModulus.size() - 1)));
      !bits || *bits > maxFieldSize()) {
    throw Error(Errc::FieldTooLarge, "witness field exceeds the configured cap");
  }
  FieldPtr base = gf::fieldFromModuli(p, modulus);
  FieldPtr top = gf::fieldFromModuli(p, modulus, extModulus);
  return {base, top, static_cast<unsigned>(extModulus.size() - 1)};
}

}  // namespace detail

inline CppWitness witnessFromJson(const json& j) {
  try {
    const u64 p = j.at("p").get<u64>();
    gf::Tower t = detail::towerFromModuli(p, j.at("modulus").get<std::vector<Code>>(),
                                          j.at("extModulus").get<std::vector<Code>>());
    if (j.at("m").get<unsigned>() != t.base->absDegree() || j.at("n").get<unsigned>() != t.n) {
      throw Error(Errc::ParseError, "m or n disagrees with the moduli");
    }
    auto b = j.at("b").get<std::vector<Code>>();
    for (Code c : b) {
      if (c >= t.base->size()) throw Error(Errc::ParseError, "coefficient of b outside F_q");
    }
    if (b.size() > t.n) throw Error(Errc::ParseError, "b has too many coefficients");
    b.resize(t.n, 0);
    CppWitness w;
    w.tower = t;
    w.d = j.at("d").get<u64>();
    w.b = t.top->fromBaseCoeffs(b);
    w.family = j.value("family", std::string("custom"));
    w.params = j.value("params", json::object());
    w.verified = core::verificationFromName(j.value("verified", std::string("CriterionOnly")));
    w.outsideHypothesis = core::outsideHypothesis(t.q(), t.n);
    return w;
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, std::string("witness JSON: ") + ex.what());
  }
}

inline constexpr const char* kCsvHeader =
    "# elements are base-p integers of their coefficient vectors, constant term least significant; "
    "moduli are ';'-separated coefficients, constant term first\n"
    "p,m,n,modulus,extModulus,d,b,family,verified,params\n";

namespace detail {

inline std::string joinCodes(const std::vector<Code>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

inline std::vector<Code> splitCodes(const std::string& s) {
  std::vector<Code> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw Error(Errc::ParseError, "bad number '" + tok + "'");
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad number '" + tok + "'");
    }
  }
  return out;
}

inline std::string csvQuote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

inline std::vector<std::string> csvSplit(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cells.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.emplace_back();
    } else {
      cells.back() += ch;
    }
  }
  if (quoted) throw Error(Errc::ParseError, "unterminated quote in CSV row");
  return cells;
}

}  // namespace detail

inline std::string witnessToCsvRow(const CppWitness& w) {
  const auto& t = w.tower;
  std::ostringstream os;
  os << t.base->characteristic() << ',' << t.base->absDegree() << ',' << t.n << ','
     << detail::joinCodes(baseModulus(*t.base)) << ',' << detail::joinCodes(t.top->modulus()) << ',' << w.d << ','
     << w.b << ',' << w.family << ',' << core::verificationName(w.verified) << ','
     << detail::csvQuote(w.params.dump());
  return os.str();
}

inline CppWitness witnessFromCsvRow(const std::string& line) {
  const auto cells = detail::csvSplit(line);
  if (cells.size() != 10) throw Error(Errc::ParseError, "CSV row needs 10 cells, got " + std::to_string(cells.size()));
  auto num = [&](std::size_t i) {
    const auto v = detail::splitCodes(cells[i]);
    if (v.size() != 1) throw Error(Errc::ParseError, "cell " + std::to_string(i) + " is not a number");
    return v.front();
  };
  json j = {{"p", num(0)},
            {"m", num(1)},
            {"n", num(2)},
            {"modulus", detail::splitCodes(cells[3])},
            {"extModulus", detail::splitCodes(cells[4])},
            {"d", num(5)},
            {"family", cells[7]},
            {"verified", cells[8]}};
  try {
    j["params"] = cells[9].empty() ? json::object() : json::parse(cells[9]);
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, std::string("params cell: ") + ex.what());
  }
  // b arrives as a flat code; convert to coefficients over F_q.
  j["b"] = json::array();
  CppWitness probe = witnessFromJson(j);
  const Code b = num(6);
  if (b >= probe.tower.top->size()) throw Error(Errc::ParseError, "b outside F_{q^n}");
  probe.b = b;
  return probe;
}

inline std::string witnessesToCsv(const std::vector<CppWitness>& ws) {
  std::string out = kCsvHeader;
  for (const auto& w : ws) out += witnessToCsvRow(w) + "\n";
  return out;
}

/// Parses JSON (report object, array or single witness) or CSV text.
inline std::vector<CppWitness> parseWitnesses(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  std::vector<CppWitness> out;
  if (text[first] == '{' || text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& ex) {
      throw Error(Errc::ParseError, ex.what());
    }
    if (j.is_object() && j.contains("witnesses")) j = j["witnesses"];
    if (j.is_object()) j = json::array({j});
    for (const auto& w : j) out.push_back(witnessFromJson(w));
    return out;
  }
  std::istringstream is(text);
  std::string line;
  bool header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header && line.rfind("p,m,n", 0) == 0) {
      header = true;
      continue;
    }
    out.push_back(witnessFromCsvRow(line));
  }
  return out;
}

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cppforge::scan
