#pragma once

// Shared records for the family constructors.

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cppforge/core/goodness.hpp"
#include "cppforge/gf/construct.hpp"
#include "cppforge/gf/ops.hpp"
#include "cppforge/poly/poly.hpp"

namespace cppforge::families {

using gf::Code;
using gf::Field;
using gf::FieldPtr;
using poly::Poly;
using json = nlohmann::json;

enum class Tag { A1, A2, B, C, D_lin2, D_lin3, D_general, Deg8, Deg9 };

constexpr std::string_view tagName(Tag t) noexcept {
  switch (t) {
    case Tag::A1: return "A1";
    case Tag::A2: return "A2";
    case Tag::B: return "B";
    case Tag::C: return "C";
    case Tag::D_lin2: return "D_lin2";
    case Tag::D_lin3: return "D_lin3";
    case Tag::D_general: return "D_general";
    case Tag::Deg8: return "Deg8";
    case Tag::Deg9: return "Deg9";
  }
  return "Unknown";
}

inline Tag tagFromName(std::string_view s) {
  for (Tag t : {Tag::A1, Tag::A2, Tag::B, Tag::C, Tag::D_lin2, Tag::D_lin3, Tag::D_general, Tag::Deg8, Tag::Deg9}) {
    if (tagName(t) == s) return t;
  }
  throw Error(Errc::ConfigInvalid, "unknown family '" + std::string(s) + "'");
}

/// A constructed polynomial with its predicted verdict.
struct Construction {
  Tag tag = Tag::A1;
  FieldPtr field;  // F_q
  unsigned n = 0;  // deg g = n + 1
  Poly g;
  bool predictedGood = false;
  json params = json::object();
  /// Distinct predicted roots of v_g, ascending, living in rootField. Empty
  /// rootField means the prediction carries no explicit roots.
  FieldPtr rootField;
  std::vector<Code> predictedRoots;
};

/// Predicted roots are only materialized in extensions up to this size.
inline constexpr u64 kRootFieldLimit = u64{1} << 24;

inline std::vector<Code> sortedUnique(std::vector<Code> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// F_{q^n} when it is small enough to host predicted roots.
inline FieldPtr rootTower(const FieldPtr& F, unsigned n) {
  if (!checkedPow(F->size(), n, kRootFieldLimit)) return nullptr;
  return gf::mkTower(F, n);
}

/// Multiplicative order of x in F^*.
inline u64 elementOrder(const Field& F, Code x) {
  if (x == 0) throw Error(Errc::InvalidArgument, "order of zero");
  u64 order = F.size() - 1;
  for (u64 r : primeDivisors(order)) {
    while (order % r == 0 && F.pow(x, order / r) == 1) order /= r;
  }
  return order;
}

inline json codesJson(const std::vector<Code>& v) {
  json j = json::array();
  for (Code c : v) j.push_back(c);
  return j;
}

}  // namespace cppforge::families
