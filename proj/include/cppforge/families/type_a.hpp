#pragma once

// Cyclic family (x+e)^(n+1) - e^(n+1) and the shifted Dickson family
// D_{n+1}(x+e, a) - D_{n+1}(e, a), with n+1 a prime different from p.

#include "cppforge/families/common.hpp"
#include "cppforge/poly/special.hpp"

namespace cppforge::families {

namespace detail {
inline void requirePrimeDegree(const Field& F, unsigned n) {
  const u64 m = n + 1;
  if (n < 2 || !isPrime(m) || m == F.characteristic()) {
    throw Error(Errc::NotPrimeDegree, "n+1=" + std::to_string(m) + " must be a prime >= 3 different from p");
  }
}
}  // namespace detail

inline Construction constructA1(const FieldPtr& F, unsigned n, Code e) {
  detail::requirePrimeDegree(*F, n);
  const u64 q = F->size();
  if ((q - 1) % (n + 1) == 0) throw Error(Errc::DividesQMinus1, "n+1 divides q-1");
  if (e == 0) throw Error(Errc::ZeroShift, "e must be nonzero");
  Construction c;
  c.tag = Tag::A1;
  c.field = F;
  c.n = n;
  const Poly u(F, {e, 1});
  c.g = poly::pow(u, n + 1) - Poly::constant(F, F->pow(e, n + 1));
  const u64 ord = ordMod(q, n + 1);
  c.predictedGood = ord == n;
  c.params = {{"e", e}, {"ord", ord}};
  if (FieldPtr top = rootTower(F, n)) {
    const Code zeta = gf::rootOfUnity(*top, n + 1);
    const Code minusE = top->neg(e);
    Code z = 1;
    for (unsigned i = 1; i <= n; ++i) {
      z = top->mul(z, zeta);
      c.predictedRoots.push_back(top->mul(minusE, top->sub(z, 1)));
    }
    c.predictedRoots = sortedUnique(std::move(c.predictedRoots));
    c.rootField = top;
  }
  return c;
}

/// alpha_i = zeta^i + zeta^-i, beta_i = zeta^i - zeta^-i for a fixed zeta_{n+1} in ctx.
struct DicksonSplitData {
  unsigned i = 0;
  Code alpha = 0;
  Code beta = 0;
};

inline std::vector<DicksonSplitData> dicksonSplit(const Field& ctx, unsigned n) {
  const Code zeta = gf::rootOfUnity(ctx, n + 1);
  std::vector<DicksonSplitData> out;
  for (unsigned i = 1; i <= n; ++i) {
    const Code zi = ctx.pow(zeta, i);
    const Code zinv = ctx.inv(zi);
    out.push_back({i, ctx.add(zi, zinv), ctx.sub(zi, zinv)});
  }
  return out;
}

inline Construction constructA2(const FieldPtr& F, unsigned n, Code a, Code e) {
  detail::requirePrimeDegree(*F, n);
  const u64 q = F->size();
  if (static_cast<u64>(mulMod(q, q, n + 1)) == 1) throw Error(Errc::DividesQSquaredMinus1, "n+1 divides q^2-1");
  if (a == 0) throw Error(Errc::ZeroA, "a must be nonzero");
  const Poly D = poly::dicksonPoly(F, n + 1, a);
  if (poly::derivative(D).eval(e) == 0) throw Error(Errc::DegenerateDerivative, "D'_{n+1}(e, a) = 0");
  Construction c;
  c.tag = Tag::A2;
  c.field = F;
  c.n = n;
  c.g = poly::shift(D, e) - Poly::constant(F, D.eval(e));
  const u64 ord = ordMod(q, n + 1);
  const unsigned half = n / 2;
  const FieldPtr top = rootTower(F, n);
  c.params = {{"a", a}, {"e", e}, {"ord", ord}};

  if (F->characteristic() != 2) {
    const Code disc = F->sub(F->sqr(e), F->mul(F->fromInt(4), a));
    const bool square = gf::isSquare(*F, disc);
    if (half % 2 == 0) c.predictedGood = ord == n;
    else c.predictedGood = (ord == n && square) || (ord == half && (disc == 0 || !square));
    c.params["disc"] = disc;
    c.params["discSquare"] = square;
    if (top) {
      const Code inv2 = top->inv(top->fromInt(2));
      std::vector<Code> roots;
      bool complete = true;
      for (const auto& s : dicksonSplit(*top, n)) {
        if (s.i > half) break;
        const auto r = gf::sqrt(*top, top->mul(top->sqr(s.beta), disc));
        if (!r) {
          complete = false;
          break;
        }
        const Code base = top->mul(e, top->sub(s.alpha, top->fromInt(2)));
        roots.push_back(top->neg(top->mul(inv2, top->add(base, *r))));
        roots.push_back(top->neg(top->mul(inv2, top->sub(base, *r))));
      }
      if (complete) {
        c.rootField = top;
        c.predictedRoots = sortedUnique(std::move(roots));
      }
    }
    return c;
  }

  // Characteristic 2.
  if (e == 0) {
    c.predictedGood = ord == n || (ord == half && half % 2 == 1);
  } else {
    if (!top) throw Error(Errc::FieldTooLarge, "F_{q^n} too large for the trace condition");
    const Code aOverE2 = top->div(a, top->sqr(e));
    json traces = json::array();
    Code trace1 = 0;
    const bool ordOk = ord == n || ord == half;
    for (const auto& s : dicksonSplit(*top, n)) {
      const Code delta = top->add(top->inv(s.alpha), aOverE2);
      if (ordOk) {
        const Code t = gf::traceMap(*top, delta, 1, F->absDegree() * half);
        traces.push_back(t);
        if (s.i == 1) trace1 = t;
      }
    }
    c.params["deltaTraces"] = traces;
    c.predictedGood = ordOk && trace1 == 1;
  }
  if (top) {
    std::vector<Code> roots;
    bool complete = true;
    for (const auto& s : dicksonSplit(*top, n)) {
      if (s.i > half) break;
      const Code am2 = top->sub(s.alpha, top->fromInt(2));
      const Code a1 = top->mul(e, am2);
      const Code a0 = top->mul(am2, top->sub(top->mul(top->add(s.alpha, top->fromInt(2)), a), top->sqr(e)));
      auto r = gf::solveQuadratic(*top, 1, a1, a0);
      if (r.size() < (e == 0 ? 1u : 2u)) {
        complete = false;
        break;
      }
      roots.insert(roots.end(), r.begin(), r.end());
    }
    if (complete) {
      c.rootField = top;
      c.predictedRoots = sortedUnique(std::move(roots));
    }
  }
  return c;
}

}  // namespace cppforge::families
