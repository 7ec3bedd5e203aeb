#pragma once

// Characteristic-3 family built from u = x+e:
//   f(u) = u (u^2 - a)^((s+1)/4) [((u^2 - a)^((s-1)/2) + a^((s-1)/2)) / u^2]^((s+1)/2),
// s = 3^r, a a non-square. Expected never to be good.

#include <numeric>

#include "cppforge/families/common.hpp"

namespace cppforge::families {

inline Construction constructC(const FieldPtr& F, unsigned r, Code a, Code e) {
  if (F->characteristic() != 3) throw Error(Errc::NotChar3, "type C needs characteristic 3");
  const unsigned m = F->absDegree();
  if (r < 2 || std::gcd(r, 2 * m) != 1) throw Error(Errc::BadS, "need s = 3^r > 3 with gcd(r, 2m) = 1");
  auto s = checkedPow(3, r, u64{1} << 16);
  if (!s) throw Error(Errc::BadS, "s too large");
  if (a == 0 || gf::isSquare(*F, a)) throw Error(Errc::ANotNonSquare, "a must be a non-square");
  const Poly u = Poly::x(F);
  const Poly w = u * u - Poly::constant(F, a);
  const Poly num = poly::pow(w, (*s - 1) / 2) + Poly::constant(F, F->pow(a, (*s - 1) / 2));
  auto [quot, rem] = poly::divRem(num, u * u);
  if (!rem.isZero()) throw Error(Errc::InvalidArgument, "type C numerator not divisible by u^2");
  const Poly fu = u * poly::pow(w, (*s + 1) / 4) * poly::pow(quot, (*s + 1) / 2);
  const u64 expected = *s * (*s - 1) / 2;
  if (static_cast<u64>(fu.degree()) != expected) throw Error(Errc::InvalidArgument, "type C degree mismatch");
  Poly f = poly::shift(fu, e);
  f = f - Poly::constant(F, f.coeff(0));
  Construction c;
  c.tag = Tag::C;
  c.field = F;
  c.n = static_cast<unsigned>(expected - 1);
  c.g = std::move(f);
  c.predictedGood = false;
  c.params = {{"r", r}, {"s", *s}, {"a", a}, {"e", e}};
  return c;
}

}  // namespace cppforge::families
