#pragma once

// Degree-8 classification in characteristic 2:
// f = x^8 + A1 x^7 + ... + A7 x is exceptional iff A1 = A2 = A3 = A5 = 0 and
// g = x^7 + A4 x^3 + A6 x + A7 has no roots in F_q^*, and good iff moreover
// g is irreducible.

#include <array>

#include "cppforge/families/common.hpp"
#include "cppforge/poly/factor.hpp"

namespace cppforge::families {

struct Deg8Result {
  bool exceptional = false;
  bool good = false;
  Poly f;
  Poly gPoly;
};

/// x^8 + sum A_i x^(8-i).
inline Poly deg8Poly(const FieldPtr& F, const std::array<Code, 7>& A) {
  std::vector<Code> c(9, 0);
  c[8] = 1;
  for (unsigned i = 1; i <= 7; ++i) c[8 - i] = A[i - 1];
  return {F, std::move(c)};
}

inline Deg8Result classifyDeg8(const FieldPtr& F, const std::array<Code, 7>& A) {
  if (F->characteristic() != 2) throw Error(Errc::NotChar2, "degree-8 classification needs characteristic 2");
  Deg8Result r;
  r.f = deg8Poly(F, A);
  r.gPoly = Poly(F, {A[6], A[5], 0, A[3], 0, 0, 0, 1});
  if (A[0] != 0 || A[1] != 0 || A[2] != 0 || A[4] != 0) return r;
  for (Code z : poly::distinctRootsIn(r.gPoly, F)) {
    if (z != 0) return r;
  }
  r.exceptional = true;
  r.good = poly::isIrreducible(r.gPoly);
  return r;
}

inline Construction constructDeg8(const FieldPtr& F, Code A4, Code A6, Code A7) {
  const auto res = classifyDeg8(F, {0, 0, 0, A4, 0, A6, A7});
  Construction c;
  c.tag = Tag::Deg8;
  c.field = F;
  c.n = 7;
  c.g = res.f;
  c.predictedGood = res.good;
  c.params = {{"A4", A4}, {"A6", A6}, {"A7", A7}, {"exceptional", res.exceptional}};
  return c;
}

}  // namespace cppforge::families
