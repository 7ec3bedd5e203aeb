#pragma once

// Degree-9 classification in characteristic 3 for
// F = x^9 + A1 x^8 + ... + A8 x. Four coefficient shapes carry the
// exceptional polynomials; shapes are tried in order i, ii, iii, iv and the
// first match decides, with every match recorded.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "cppforge/core/goodness.hpp"
#include "cppforge/families/common.hpp"
#include "cppforge/poly/factor.hpp"

namespace cppforge::families {

enum class Deg9Case { None, I, II, III, IV };

constexpr std::string_view deg9CaseName(Deg9Case c) noexcept {
  switch (c) {
    case Deg9Case::None: return "none";
    case Deg9Case::I: return "i";
    case Deg9Case::II: return "ii";
    case Deg9Case::III: return "iii";
    case Deg9Case::IV: return "iv";
  }
  return "none";
}

using Deg9Coeffs = std::array<Code, 8>;  // A1..A8

struct Deg9Result {
  bool exceptional = false;
  Deg9Case caseIndex = Deg9Case::None;
  std::vector<Deg9Case> matches;
  bool good = false;
  Poly f;
  poly::Factorization vFactors;
  /// Case iv: whether the product of the two displayed quartics equals v_F.
  std::optional<bool> quarticCheck;
  /// Case iv: v_F itself irreducible (stricter than good when v_F is a power).
  std::optional<bool> vIrreducible;
};

inline Poly deg9Poly(const FieldPtr& F, const Deg9Coeffs& A) {
  std::vector<Code> c(10, 0);
  c[9] = 1;
  for (unsigned i = 1; i <= 8; ++i) c[9 - i] = A[i - 1];
  return {F, std::move(c)};
}

/// Forced A6, A7, A8 of shape iii from free A3, A4 != 0, A5.
inline std::array<Code, 3> deg9ShapeIII(const Field& F, Code A3, Code A4, Code A5) {
  const Code two = F.fromInt(2);
  const Code A4i = F.inv(A4);
  const Code r = F.mul(A5, A4i);  // A5/A4
  const Code r3 = F.pow(r, 3);    // A5^3/A4^3
  const Code A6 = F.add(F.add(F.sqr(A3), F.mul(A3, r3)), F.mul(F.sqr(A5), A4i));
  const Code A7 = F.add(F.mul(two, F.mul(A3, A4)), F.mul(two, F.mul(r3, A4)));
  const Code A8 = F.add(F.add(F.mul(two, F.mul(A3, A5)), F.sqr(A4)), F.mul(two, F.mul(r3, A5)));
  return {A6, A7, A8};
}

/// Forced A6, A7, A8 of shape iv from free A2 != 0, A3, A5.
inline std::array<Code, 3> deg9ShapeIV(const Field& F, Code A2, Code A3, Code A5) {
  const Code two = F.fromInt(2);
  const Code A2i = F.inv(A2);
  const Code A6 = F.add(F.pow(A2, 3), F.mul(F.mul(A3, A5), A2i));
  const Code A7 = F.add(F.mul(two, F.mul(A2, A5)), F.mul(two, F.mul(F.pow(A3, 3), A2i)));
  const Code A8 = F.add(F.add(F.add(F.pow(A2, 4), F.mul(A3, A5)), F.mul(F.sqr(A5), A2i)),
                        F.mul(F.pow(A3, 4), F.sqr(A2i)));
  return {A6, A7, A8};
}

namespace detail {
inline bool rootlessOnUnits(const Poly& f, const FieldPtr& F) {
  for (Code z : poly::distinctRootsIn(f, F)) {
    if (z != 0) return false;
  }
  return true;
}

/// The two displayed quartic factors of v_F in shape iv, multiplied out over
/// F_{q^2} where alpha^2 = 2 A2 lives.
inline std::optional<bool> quarticProductMatches(const FieldPtr& F, const Deg9Coeffs& A, const Poly& v) {
  const FieldPtr E = gf::mkTower(F, 2);
  const Code A2 = A[1], A3 = A[2], A5 = A[4];
  const auto alpha = gf::sqrt(*E, E->mul(E->fromInt(2), A2));
  if (!alpha || *alpha == 0) return std::nullopt;
  const Code al = *alpha, ai = E->inv(al), A2i = E->inv(A2);
  auto c = [&](std::int64_t k) { return E->fromInt(k); };
  const Code common = E->add(E->mul(E->sqr(A3), A2i), E->sqr(A2));
  const Poly q1(E, {E->add(E->add(E->mul(A3, al), common), E->mul(c(2), E->mul(E->mul(A5, al), A2i))),
                    E->mul(c(2), E->add(A3, E->mul(c(2), E->mul(al, A2)))), E->mul(c(2), E->mul(A3, ai)),
                    E->mul(c(2), al), 1});
  const Poly q2(E, {E->add(E->add(E->mul(c(2), E->mul(A3, al)), common), E->mul(E->mul(A5, al), A2i)),
                    E->mul(c(2), E->add(A3, E->mul(al, A2))), E->mul(A3, ai), al, 1});
  return q1 * q2 == v.over(E);
}
}  // namespace detail

inline Deg9Result classifyDeg9(const FieldPtr& F, const Deg9Coeffs& A) {
  if (F->characteristic() != 3) throw Error(Errc::NotChar3, "degree-9 classification needs characteristic 3");
  const Field& K = *F;
  const Code A1 = A[0], A2 = A[1], A3 = A[2], A4 = A[3], A5 = A[4], A6 = A[5], A7 = A[6], A8 = A[7];
  Deg9Result r;
  r.f = deg9Poly(F, A);
  const Poly v = core::vPoly(r.f);
  r.vFactors = poly::factorize(v);

  if (A1 == 0 && A2 == 0 && A4 == 0 && A5 == 0 && A7 == 0 && A8 == 0) r.matches.push_back(Deg9Case::I);
  if (A1 == 0 && A2 == 0 && A3 == 0 && A4 == 0 && A5 == 0 && A7 == 0) r.matches.push_back(Deg9Case::II);
  if (A1 == 0 && A2 == 0 && A4 != 0) {
    const auto forced = deg9ShapeIII(K, A3, A4, A5);
    if (forced == std::array<Code, 3>{A6, A7, A8}) r.matches.push_back(Deg9Case::III);
  }
  if (A1 == 0 && A4 == 0 && A2 != 0) {
    const auto forced = deg9ShapeIV(K, A2, A3, A5);
    if (forced == std::array<Code, 3>{A6, A7, A8}) r.matches.push_back(Deg9Case::IV);
  }
  if (r.matches.empty()) return r;
  r.caseIndex = r.matches.front();
  const Code two = K.fromInt(2);
  switch (r.caseIndex) {
    case Deg9Case::I:
      // F = h(x^3) with h = y^3 + A3 y^2 + A6 y; for A3 != 0 the curve of h is
      // an absolutely irreducible parabola, so F is not even a permutation.
      r.exceptional = A3 == 0 && detail::rootlessOnUnits(Poly(F, {A6, 0, 0, A3, 0, 0, 1}), F);
      r.good = false;
      break;
    case Deg9Case::II:
      r.exceptional = detail::rootlessOnUnits(Poly(F, {A8, 0, A6, 0, 0, 0, 0, 0, 1}), F);
      r.good = r.exceptional && poly::isIrreducible(Poly(F, {A8, 0, A6, 0, 0, 0, 0, 0, 1}));
      break;
    case Deg9Case::III: {
      r.exceptional = poly::distinctRootsIn(Poly(F, {K.mul(two, A4), K.mul(two, A3), 0, 0, 1}), F).empty();
      if (r.exceptional) {
        const Poly oct(F, {K.mul(two, A4), 0, K.mul(two, A3), 0, 0, 0, 0, 0, 1});
        r.good = poly::distinctRootsIn(oct, gf::mkTower(F, 4)).empty();
      }
      break;
    }
    case Deg9Case::IV:
      r.exceptional = !gf::isSquare(K, K.mul(two, A2));
      // A single distinct factor; when A2^2 A5 + A3^3 = 0 v_F can be a power
      // of an irreducible quadratic or quartic and is still one orbit.
      r.good = r.exceptional && r.vFactors.factors.size() == 1;
      if (r.exceptional) {
        r.quarticCheck = detail::quarticProductMatches(F, A, v);
        r.vIrreducible = r.vFactors.factors.size() == 1 && r.vFactors.factors.front().second == 1;
      }
      break;
    case Deg9Case::None: break;
  }
  return r;
}

inline Construction constructDeg9(const FieldPtr& F, const Deg9Coeffs& A) {
  const auto res = classifyDeg9(F, A);
  Construction c;
  c.tag = Tag::Deg9;
  c.field = F;
  c.n = 8;
  c.g = res.f;
  c.predictedGood = res.good;
  c.params = {{"A", json(std::vector<Code>(A.begin(), A.end()))},
              {"case", deg9CaseName(res.caseIndex)},
              {"exceptional", res.exceptional}};
  return c;
}

}  // namespace cppforge::families
