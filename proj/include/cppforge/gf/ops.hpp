#pragma once

// Frobenius-derived maps, roots of unity, square roots and quadratic solving.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cppforge/gf/construct.hpp"
#include "cppforge/gf/field.hpp"

namespace cppforge::gf {

inline Code primitiveElement(const Field& F) { return F.primitiveElement(); }

/// primitive^((N-1)/s), an element of exact order s.
inline Code rootOfUnity(const Field& F, u64 s) {
  if (s == 0) throw Error(Errc::InvalidArgument, "root of unity of order 0");
  const u64 order = F.size() - 1;
  if (order % s != 0) throw Error(Errc::NoSuchRoot, "no element of order " + std::to_string(s) + " in " + F.describe());
  return F.pow(F.primitiveElement(), order / s);
}

/// A primitive s-th root of unity in the smallest extension of F containing one.
inline std::pair<FieldPtr, Code> rootOfUnityExtended(const FieldPtr& F, u64 s) {
  const u64 k = ordMod(F->size(), s);
  FieldPtr ext = k == 1 ? F : mkTower(F, static_cast<unsigned>(k));
  return {ext, rootOfUnity(*ext, s)};
}

namespace detail {
inline void checkSubfieldDegrees(const Field& F, unsigned target, unsigned source) {
  if (target == 0 || source == 0 || source % target != 0 || F.absDegree() % source != 0) {
    throw Error(Errc::NotASubfield, "no subfield F_{p^" + std::to_string(target) + "} below F_{p^" +
                                        std::to_string(source) + "} in " + F.describe());
  }
}
}  // namespace detail

/// Trace from the subfield of absolute degree `sourceDeg` (default: all of F)
/// down to the subfield of absolute degree `targetDeg`.
inline Code traceMap(const Field& F, Code x, unsigned targetDeg, unsigned sourceDeg = 0) {
  if (sourceDeg == 0) sourceDeg = F.absDegree();
  detail::checkSubfieldDegrees(F, targetDeg, sourceDeg);
  Code sum = 0, conj = x;
  for (unsigned i = 0; i < sourceDeg / targetDeg; ++i) {
    sum = F.add(sum, conj);
    conj = F.frobeniusP(conj, targetDeg);
  }
  return sum;
}

inline Code normMap(const Field& F, Code x, unsigned targetDeg, unsigned sourceDeg = 0) {
  if (sourceDeg == 0) sourceDeg = F.absDegree();
  detail::checkSubfieldDegrees(F, targetDeg, sourceDeg);
  Code prod = 1, conj = x;
  for (unsigned i = 0; i < sourceDeg / targetDeg; ++i) {
    prod = F.mul(prod, conj);
    conj = F.frobeniusP(conj, targetDeg);
  }
  return prod;
}

inline Code absoluteTrace(const Field& F, Code x) { return traceMap(F, x, 1); }

/// True when x lies in the subfield of absolute degree `deg`.
inline bool inSubfield(const Field& F, Code x, unsigned deg) { return F.frobeniusP(x, deg) == x; }

inline Code embed(Code x, const Field& from, const Field& to) {
  if (!to.hasSubfield(from)) throw Error(Errc::NotASubfield, from.describe() + " is not below " + to.describe());
  if (!from.contains(x)) throw Error(Errc::InvalidArgument, "element outside source field");
  return x;
}

inline bool isSquare(const Field& F, Code x) {
  if (x == 0 || F.characteristic() == 2) return true;
  return F.pow(x, (F.size() - 1) / 2) == 1;
}

/// A square root of x, if any (Tonelli-Shanks; Frobenius inverse in characteristic 2).
inline std::optional<Code> sqrt(const Field& F, Code x) {
  if (x == 0) return Code{0};
  if (F.characteristic() == 2) return F.frobeniusP(x, F.absDegree() - 1);
  if (!isSquare(F, x)) return std::nullopt;
  const u64 order = F.size() - 1;
  u64 t = order;
  unsigned s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  const Code minusOne = F.neg(1);
  Code z = 2;
  while (F.pow(z, order / 2) != minusOne) ++z;
  Code c = F.pow(z, t);
  Code r = F.pow(x, (t + 1) / 2);
  Code u = F.pow(x, t);
  unsigned m = s;
  while (u != 1) {
    unsigned i = 0;
    for (Code w = u; w != 1; w = F.sqr(w)) ++i;
    Code b = c;
    for (unsigned j = 0; j + 1 < m - i; ++j) b = F.sqr(b);
    r = F.mul(r, b);
    c = F.sqr(b);
    u = F.mul(u, c);
    m = i;
  }
  return r;
}

/// Encoding-least element of absolute trace 1 (characteristic 2).
inline Code traceOneElement(const Field& F) {
  for (Code c = 1; c < F.size(); ++c) {
    if (absoluteTrace(F, c) == 1) return c;
  }
  throw Error(Errc::InvalidArgument, "no trace-one element");
}

/// A root y of y^2 + y = delta in characteristic 2, or nullopt when the
/// absolute trace of delta is 1. With Tr(eps) = 1 the accumulation
///   y = sum_{i=1}^{k-1} (eps + eps^2 + ... + eps^{2^{i-1}}) delta^{2^i}
/// solves the equation; the other root is y + 1.
inline std::optional<Code> solveArtinSchreier(const Field& F, Code delta, std::optional<Code> eps = std::nullopt) {
  if (F.characteristic() != 2) throw Error(Errc::NotChar2, "Artin-Schreier form needs characteristic 2");
  if (absoluteTrace(F, delta) != 0) return std::nullopt;
  const unsigned k = F.absDegree();
  const Code e = eps ? *eps : traceOneElement(F);
  Code y = 0, partial = 0, epow = e, dpow = delta;
  for (unsigned i = 1; i < k; ++i) {
    partial = F.add(partial, epow);
    epow = F.sqr(epow);
    dpow = F.sqr(dpow);
    y = F.add(y, F.mul(partial, dpow));
  }
  return y;
}

/// Roots of a2 x^2 + a1 x + a0 in F, ascending and distinct.
inline std::vector<Code> solveQuadratic(const Field& F, Code a2, Code a1, Code a0) {
  if (a2 == 0) throw Error(Errc::DegenerateLeadingCoefficient, "quadratic with zero leading coefficient");
  std::vector<Code> roots;
  if (F.characteristic() != 2) {
    const Code disc = F.sub(F.sqr(a1), F.mul(F.fromInt(4), F.mul(a0, a2)));
    auto r = sqrt(F, disc);
    if (!r) return roots;
    const Code inv2a = F.inv(F.mul(F.fromInt(2), a2));
    roots.push_back(F.mul(F.sub(*r, a1), inv2a));
    roots.push_back(F.mul(F.sub(F.neg(*r), a1), inv2a));
  } else if (a1 == 0) {
    roots.push_back(*sqrt(F, F.div(a0, a2)));
  } else {
    // x = (a1/a2) y turns the equation into y^2 + y = a0 a2 / a1^2.
    const Code delta = F.div(F.mul(a0, a2), F.sqr(a1));
    auto y = solveArtinSchreier(F, delta);
    if (!y) return roots;
    const Code scale = F.div(a1, a2);
    roots.push_back(F.mul(scale, *y));
    roots.push_back(F.mul(scale, F.add(*y, 1)));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace cppforge::gf
