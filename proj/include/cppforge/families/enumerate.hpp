#pragma once

// Deterministic sweeps over the admissible parameters of each family.
// Constructor errors become skip records.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cppforge/families/deg8.hpp"
#include "cppforge/families/deg9.hpp"
#include "cppforge/families/linearized.hpp"
#include "cppforge/families/type_a.hpp"
#include "cppforge/families/type_b.hpp"
#include "cppforge/families/type_c.hpp"

namespace cppforge::families {

/// Optional per-parameter value lists; a missing key means "all values".
using Ranges = std::map<std::string, std::vector<u64>>;

struct Skip {
  json params;
  std::string reason;
};

struct Enumeration {
  std::vector<Construction> items;
  std::vector<Skip> skips;
};

namespace detail {

inline std::vector<u64> rangeOr(const Ranges& rg, const std::string& key, std::vector<u64> fallback) {
  auto it = rg.find(key);
  return it == rg.end() ? fallback : it->second;
}

inline std::vector<u64> allElements(const Field& F, bool includeZero) {
  std::vector<u64> v;
  for (Code x = includeZero ? 0 : 1; x < F.size(); ++x) v.push_back(x);
  return v;
}

inline std::vector<u64> elementsOr(const Ranges& rg, const std::string& key, const Field& F, bool includeZero) {
  auto v = rangeOr(rg, key, {});
  if (rg.count(key) == 0) return allElements(F, includeZero);
  for (u64 x : v) {
    if (x >= F.size()) throw Error(Errc::ConfigInvalid, key + " value " + std::to_string(x) + " outside the field");
  }
  return v;
}

inline void attempt(Enumeration& out, json params, const std::function<Construction()>& build) {
  try {
    out.items.push_back(build());
  } catch (const Error& err) {
    out.skips.push_back({std::move(params), std::string(errcName(err.code()))});
  }
}

}  // namespace detail

/// Every coefficient vector of shapes i, ii, iii, iv over F, in that order.
inline std::vector<Deg9Coeffs> deg9ShapeVectors(const FieldPtr& F, const Ranges& rg = {}) {
  const Field& K = *F;
  const auto all = detail::allElements(K, true);
  const auto units = detail::allElements(K, false);
  std::vector<Deg9Coeffs> out;
  for (u64 A3 : detail::rangeOr(rg, "A3", all)) {
    for (u64 A6 : detail::rangeOr(rg, "A6", all)) out.push_back({0, 0, A3, 0, 0, A6, 0, 0});
  }
  for (u64 A6 : detail::rangeOr(rg, "A6", all)) {
    for (u64 A8 : detail::rangeOr(rg, "A8", all)) out.push_back({0, 0, 0, 0, 0, A6, 0, A8});
  }
  for (u64 A3 : detail::rangeOr(rg, "A3", all)) {
    for (u64 A4 : detail::rangeOr(rg, "A4", units)) {
      if (A4 == 0) continue;
      for (u64 A5 : detail::rangeOr(rg, "A5", all)) {
        const auto f = deg9ShapeIII(K, A3, A4, A5);
        out.push_back({0, 0, A3, A4, A5, f[0], f[1], f[2]});
      }
    }
  }
  for (u64 A2 : detail::rangeOr(rg, "A2", units)) {
    if (A2 == 0) continue;
    for (u64 A3 : detail::rangeOr(rg, "A3", all)) {
      for (u64 A5 : detail::rangeOr(rg, "A5", all)) {
        const auto f = deg9ShapeIV(K, A2, A3, A5);
        out.push_back({0, A2, A3, 0, A5, f[0], f[1], f[2]});
      }
    }
  }
  return out;
}

inline Enumeration enumerateFamily(Tag tag, const FieldPtr& F, unsigned n, const Ranges& rg = {}) {
  using detail::attempt;
  using detail::elementsOr;
  const Field& K = *F;
  const unsigned m = K.absDegree();
  Enumeration out;
  switch (tag) {
    case Tag::A1:
      for (u64 e : elementsOr(rg, "e", K, false)) {
        attempt(out, {{"e", e}}, [&] { return constructA1(F, n, e); });
      }
      break;
    case Tag::A2:
      for (u64 a : elementsOr(rg, "a", K, false)) {
        for (u64 e : elementsOr(rg, "e", K, true)) {
          attempt(out, {{"a", a}, {"e", e}}, [&] { return constructA2(F, n, a, e); });
        }
      }
      break;
    case Tag::B:
      for (u64 r : detail::rangeOr(rg, "r", divisors(n))) {
        for (u64 a : elementsOr(rg, "a", K, false)) {
          for (u64 e : elementsOr(rg, "e", K, true)) {
            attempt(out, {{"r", r}, {"a", a}, {"e", e}},
                    [&] { return constructB(F, n, static_cast<unsigned>(r), a, e); });
          }
        }
      }
      break;
    case Tag::C:
      for (u64 r : detail::rangeOr(rg, "r", {3})) {
        for (u64 a : elementsOr(rg, "a", K, false)) {
          if (K.characteristic() == 3 && gf::isSquare(K, a)) continue;
          for (u64 e : elementsOr(rg, "e", K, true)) {
            attempt(out, {{"r", r}, {"a", a}, {"e", e}},
                    [&] { return constructC(F, static_cast<unsigned>(r), a, e); });
          }
        }
      }
      break;
    case Tag::D_lin2:
      for (u64 r : detail::rangeOr(rg, "r", divisors(m))) {
        attempt(out, {{"r", r}}, [&] { return constructLin2(F, static_cast<unsigned>(r)); });
      }
      break;
    case Tag::D_lin3: {
      std::vector<u64> rs;
      for (u64 r = 1; r <= 2 * m; ++r) rs.push_back(r);
      for (u64 r : detail::rangeOr(rg, "r", rs)) {
        attempt(out, {{"r", r}}, [&] { return constructLin3(F, static_cast<unsigned>(r)); });
      }
      break;
    }
    case Tag::D_general:
      for (u64 r : detail::rangeOr(rg, "r", divisors(m))) {
        const auto N = checkedPow(K.characteristic(), static_cast<unsigned>(r), u64{1} << 20);
        if (!N) {
          out.skips.push_back({{{"r", r}}, "FieldTooLarge"});
          continue;
        }
        for (u64 k : detail::rangeOr(rg, "k", divisors(*N - 1))) {
          for (u64 e : elementsOr(rg, "e", K, true)) {
            attempt(out, {{"r", r}, {"k", k}, {"e", e}}, [&] {
              return constructLinGeneralFromLin2(F, static_cast<unsigned>(r), static_cast<unsigned>(k), e);
            });
          }
        }
      }
      break;
    case Tag::Deg8:
      for (u64 A4 : elementsOr(rg, "A4", K, true)) {
        for (u64 A6 : elementsOr(rg, "A6", K, true)) {
          for (u64 A7 : elementsOr(rg, "A7", K, true)) {
            attempt(out, {{"A4", A4}, {"A6", A6}, {"A7", A7}}, [&] { return constructDeg8(F, A4, A6, A7); });
          }
        }
      }
      break;
    case Tag::Deg9:
      if (K.characteristic() != 3) {
        out.skips.push_back({json::object(), "NotChar3"});
        break;
      }
      for (const auto& A : deg9ShapeVectors(F, rg)) {
        attempt(out, {{"A", json(std::vector<Code>(A.begin(), A.end()))}}, [&] { return constructDeg9(F, A); });
      }
      break;
  }
  return out;
}

/// Re-runs a constructor from the params recorded by it.
inline Construction rebuild(Tag tag, const FieldPtr& F, unsigned n, const json& params) {
  try {
    auto u = [&](const char* k) { return params.at(k).get<u64>(); };
    auto un = [&](const char* k) { return static_cast<unsigned>(params.at(k).get<u64>()); };
    switch (tag) {
      case Tag::A1: return constructA1(F, n, u("e"));
      case Tag::A2: return constructA2(F, n, u("a"), u("e"));
      case Tag::B: return constructB(F, n, un("r"), u("a"), u("e"));
      case Tag::C: return constructC(F, un("r"), u("a"), u("e"));
      case Tag::D_lin2: return constructLin2(F, un("r"));
      case Tag::D_lin3: return constructLin3(F, un("r"));
      case Tag::D_general: return constructLinGeneralFromLin2(F, un("r"), un("k"), u("e"));
      case Tag::Deg8: return constructDeg8(F, u("A4"), u("A6"), u("A7"));
      case Tag::Deg9: {
        const auto v = params.at("A").get<std::vector<Code>>();
        if (v.size() != 8) throw Error(Errc::ParseError, "Deg9 params need 8 coefficients");
        Deg9Coeffs A{};
        std::copy(v.begin(), v.end(), A.begin());
        return constructDeg9(F, A);
      }
    }
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, std::string("family params: ") + ex.what());
  }
  throw Error(Errc::ParseError, "unknown family");
}

}  // namespace cppforge::families
