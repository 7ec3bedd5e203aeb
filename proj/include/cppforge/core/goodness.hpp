#pragma once

// v_g, the goodness verdict, and the Frobenius-orbit oracle it is checked against.

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "cppforge/gf/construct.hpp"
#include "cppforge/gf/ops.hpp"
#include "cppforge/poly/factor.hpp"

namespace cppforge::core {

using gf::Code;
using gf::Field;
using gf::FieldPtr;
using poly::Factorization;
using poly::Poly;

/// (g(-x) - g(0)) / (-x); coefficient j is (-1)^j g_{j+1}.
inline Poly vPoly(const Poly& g) {
  if (g.degree() < 1) throw Error(Errc::ConstantPolynomial, "v_g needs deg g >= 1");
  const Field& F = g.F();
  std::vector<Code> v(static_cast<std::size_t>(g.degree()));
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = (j % 2 == 0) ? g.coeff(j + 1) : F.neg(g.coeff(j + 1));
  return {g.field(), std::move(v)};
}

enum class GoodReason { Good, GZeroNonzero, GPrimeZero, MultipleOrbits, RootInBaseField };

constexpr std::string_view reasonName(GoodReason r) noexcept {
  switch (r) {
    case GoodReason::Good: return "Good";
    case GoodReason::GZeroNonzero: return "GZeroNonzero";
    case GoodReason::GPrimeZero: return "GPrimeZero";
    case GoodReason::MultipleOrbits: return "MultipleOrbits";
    case GoodReason::RootInBaseField: return "RootInBaseField";
  }
  return "Unknown";
}

struct GoodnessReport {
  Poly g;
  Poly vg;
  Factorization factorization;
  std::vector<unsigned> orbitSizes;  // degrees of the distinct irreducible factors of vg, ascending
  bool isGood = false;
  GoodReason reason = GoodReason::MultipleOrbits;
};

inline GoodnessReport isGood(const Poly& g) {
  if (g.degree() < 2) throw Error(Errc::ConstantPolynomial, "goodness needs deg g >= 2");
  GoodnessReport rep;
  rep.g = g;
  rep.vg = vPoly(g);
  rep.factorization = poly::factorize(rep.vg);
  bool linear = false;
  for (const auto& [f, e] : rep.factorization.factors) {
    rep.orbitSizes.push_back(static_cast<unsigned>(f.degree()));
    linear = linear || f.degree() == 1;
  }
  std::sort(rep.orbitSizes.begin(), rep.orbitSizes.end());
  if (g.coeff(0) != 0) rep.reason = GoodReason::GZeroNonzero;
  else if (g.coeff(1) == 0) rep.reason = GoodReason::GPrimeZero;
  else if (rep.factorization.distinctCount() != 1) rep.reason = linear ? GoodReason::RootInBaseField : GoodReason::MultipleOrbits;
  else rep.reason = GoodReason::Good;
  rep.isGood = rep.reason == GoodReason::Good;
  return rep;
}

struct Orbit {
  unsigned size = 0;
  /// Least-encoded root of the orbit, in the degree-`size` extension. Absent
  /// when that extension was too large to enumerate.
  std::optional<gf::FqElem> representative;
};

struct OrbitOptions {
  /// Extensions up to this size are enumerated element by element; beyond
  /// it orbits are counted from deg gcd(f, x^(q^k) - x) by Moebius inversion.
  u64 enumerationLimit = 4096;
  bool requireRepresentatives = false;
};

/// Distinct roots of f grouped into orbits of x -> x^q, q = |field of f|.
inline std::vector<Orbit> orbitStructure(const Poly& f, const OrbitOptions& opt = {}) {
  if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "orbit structure of a constant");
  const FieldPtr& F = f.field();
  const u64 q = F->size();
  const Poly sq = poly::squarefreePart(f);
  const int total = sq.degree();
  std::vector<Orbit> out;
  int found = 0;
  std::vector<u64> rootsUpTo;  // r_k = number of distinct roots in F_{q^k}, index k
  rootsUpTo.push_back(0);
  const Poly x = Poly::x(F);
  Poly frob = x % sq;
  for (unsigned k = 1; found < total; ++k) {
    frob = poly::powMod(frob, q, sq);
    rootsUpTo.push_back(static_cast<u64>(poly::gcd(sq, frob - x).degree()));
    u64 exact = 0;
    for (u64 d : divisors(k)) {
      const int mu = moebius(k / d);
      exact = static_cast<u64>(static_cast<std::int64_t>(exact) + mu * static_cast<std::int64_t>(rootsUpTo[d]));
    }
    if (exact == 0) continue;
    auto size = checkedPow(q, k, opt.enumerationLimit);
    if (size) {
      const FieldPtr ext = k == 1 ? F : gf::mkTower(F, k);
      const Poly fe = sq.over(ext);
      std::vector<bool> seen(ext->size(), false);
      u64 enumerated = 0;
      for (Code z = 0; z < ext->size(); ++z) {
        if (seen[z] || fe.eval(z) != 0) continue;
        std::vector<Code> orbit{z};
        for (Code w = ext->pow(z, q); w != z; w = ext->pow(w, q)) orbit.push_back(w);
        for (Code w : orbit) seen[w] = true;
        if (orbit.size() != k) continue;
        out.push_back({k, gf::FqElem(ext, *std::min_element(orbit.begin(), orbit.end()))});
        enumerated += k;
      }
      if (enumerated != exact) throw Error(Errc::InvalidArgument, "orbit enumeration disagrees with root count");
    } else {
      if (opt.requireRepresentatives) throw Error(Errc::FieldTooLarge, "splitting field too large to enumerate");
      for (u64 i = 0; i < exact / k; ++i) out.push_back({k, std::nullopt});
    }
    found += static_cast<int>(exact);
  }
  return out;
}

}  // namespace cppforge::core
