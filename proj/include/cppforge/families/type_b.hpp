#pragma once

// Degree-p family (x+e)((x+e)^r - a)^k - e(e^r - a)^k with n+1 = p, r | n, k = n/r.

#include "cppforge/families/common.hpp"
#include "cppforge/poly/factor.hpp"

namespace cppforge::families {

inline Construction constructB(const FieldPtr& F, unsigned n, unsigned r, Code a, Code e) {
  const u64 p = F->characteristic();
  if (p == 2 || n + 1 != p) throw Error(Errc::NotPrimeCharDegree, "type B needs odd p = n+1");
  if (r == 0 || n % r != 0) throw Error(Errc::RNotDivisor, "r must divide n");
  if (a == 0) throw Error(Errc::AZero, "a must be nonzero");
  const u64 q = F->size();
  if (F->pow(a, (q - 1) / r) == 1) throw Error(Errc::ExceptionalityViolated, "a^((q-1)/r) = 1");
  const unsigned k = n / r;
  Construction c;
  c.tag = Tag::B;
  c.field = F;
  c.n = n;
  const Poly u(F, {e, 1});
  const Poly inner = poly::pow(u, r) - Poly::constant(F, a);
  const Code g0 = F->mul(e, F->pow(F->sub(F->pow(e, r), a), k));
  c.g = u * poly::pow(inner, k) - Poly::constant(F, g0);
  c.params = {{"r", r}, {"k", k}, {"a", a}, {"e", e}};
  const FieldPtr top = rootTower(F, n);

  if (e == 0) {
    // x^r - a irreducible: a is no l-th power for any prime l | r.
    bool good = true;
    for (u64 l : primeDivisors(r)) {
      if ((q - 1) % l == 0 && F->pow(a, (q - 1) / l) == 1) good = false;
    }
    c.predictedGood = good;
    if (top) {
      std::vector<Code> roots;
      for (Code alpha : poly::distinctRootsIn(Poly::monomial(F, 1, r) - Poly::constant(F, a), top)) {
        roots.push_back(top->neg(alpha));
      }
      c.rootField = top;
      c.predictedRoots = sortedUnique(std::move(roots));
    }
    return c;
  }

  const Code ratio = F->div(a, F->pow(e, r));
  const Code norm = gf::normMap(*F, ratio, 1);
  const u64 normOrder = elementOrder(*F, norm);
  c.predictedGood = normOrder == p - 1;
  c.params["normOrder"] = normOrder;
  if (top) {
    const auto us = poly::distinctRootsIn(Poly::monomial(F, 1, p - 1) - Poly::constant(F, a), top);
    const auto vs = poly::distinctRootsIn(Poly::monomial(F, 1, k) - Poly::constant(F, e), top);
    if (!us.empty() && !vs.empty()) {
      const Code u0 = us.front(), v0 = vs.front();
      std::vector<Code> roots;
      for (u64 lambda = 1; lambda < p; ++lambda) {
        const Code w = top->sub(v0, top->mul(top->fromInt(static_cast<std::int64_t>(lambda)), u0));
        roots.push_back(top->sub(e, top->pow(w, k)));
      }
      c.rootField = top;
      c.predictedRoots = sortedUnique(std::move(roots));
      c.params["u0"] = u0;
      c.params["v0"] = v0;
    }
  }
  return c;
}

}  // namespace cppforge::families
