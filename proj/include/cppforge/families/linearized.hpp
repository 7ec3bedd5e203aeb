#pragma once

// Linearized constructions of degree p^r:
//   lin2     x^(p^r) - zeta_{q-1} x, r | m;
//   lin3     the p^eps-associate of a primitive polynomial over F_{p^eps};
//   general  S_e = (x+e)^j H(x+e)^k - e^j H(e)^k for L = x^j H(x^k) linearized.

#include <numeric>

#include "cppforge/families/common.hpp"
#include "cppforge/poly/factor.hpp"
#include "cppforge/poly/special.hpp"

namespace cppforge::families {

namespace detail {

/// Roots of v_g in F_{q^n} if that field is small enough.
inline void attachRoots(Construction& c) {
  if (FieldPtr top = rootTower(c.field, c.n)) {
    c.rootField = top;
    c.predictedRoots = poly::distinctRootsIn(core::vPoly(c.g), top);
  }
}

/// Exponent r with x = p^r, or nullopt.
inline std::optional<unsigned> logP(u64 x, u64 p) {
  unsigned r = 0;
  while (x > 1 && x % p == 0) {
    x /= p;
    ++r;
  }
  if (x != 1) return std::nullopt;
  return r;
}

}  // namespace detail

inline Construction constructLin2(const FieldPtr& F, unsigned r) {
  const unsigned m = F->absDegree();
  if (r == 0 || m % r != 0) throw Error(Errc::RNotDividingM, "r must divide m");
  const u64 p = F->characteristic();
  const u64 deg = *checkedPow(p, r);
  Construction c;
  c.tag = Tag::D_lin2;
  c.field = F;
  c.n = static_cast<unsigned>(deg - 1);
  c.g = Poly::monomial(F, 1, deg) - Poly::monomial(F, F->primitiveElement(), 1);
  c.predictedGood = true;
  c.params = {{"r", r}};
  detail::attachRoots(c);
  return c;
}

/// Encoding-least monic primitive polynomial of degree d over K.
inline Poly primitivePolynomial(const FieldPtr& K, unsigned d) {
  const u64 Q = K->size();
  const u64 order = *checkedPow(Q, d) - 1;
  const auto primes = primeDivisors(order);
  const u64 count = *checkedPow(Q, d);
  std::vector<Code> c(d + 1, 0);
  c[d] = 1;
  for (u64 idx = 0; idx < count; ++idx) {
    u64 t = idx;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = t % Q;
      t /= Q;
    }
    if (c[0] == 0) continue;
    const Poly f(K, c);
    if (!poly::isIrreducible(f)) continue;
    bool primitive = true;
    for (u64 l : primes) {
      if (poly::powMod(Poly::x(K), order / l, f).isOne()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return f;
  }
  throw Error(Errc::InvalidArgument, "no primitive polynomial found");
}

/// Image of the canonical F_{p^eps} in F: elements map through the least root
/// of F_{p^eps}'s modulus.
inline std::vector<Code> embedCanonicalSubfield(const FieldPtr& K, const FieldPtr& F) {
  const unsigned eps = K->absDegree();
  std::vector<Code> image(K->size());
  if (eps == 1 || K->sameAs(*F) || F->hasSubfield(*K)) {
    for (Code x = 0; x < K->size(); ++x) image[x] = x;
    return image;
  }
  FieldPtr prime = F;
  while (prime->base()) prime = prime->base();
  const Poly mod(prime, K->modulus());
  const auto roots = poly::distinctRootsIn(mod, F);
  if (roots.empty()) throw Error(Errc::NotASubfield, "subfield modulus has no root");
  const Code theta = roots.front();
  for (Code x = 0; x < K->size(); ++x) {
    const auto d = K->digits(x);
    Code y = 0, pw = 1;
    for (auto di : d) {
      y = F->add(y, F->mul(F->fromInt(di), pw));
      pw = F->mul(pw, theta);
    }
    image[x] = y;
  }
  return image;
}

inline Construction constructLin3(const FieldPtr& F, unsigned r) {
  const u64 p = F->characteristic();
  const unsigned m = F->absDegree();
  if (r == 0) throw Error(Errc::InvalidArgument, "r must be positive");
  const u64 pr = *checkedPow(p, r, u64{1} << 20);
  const unsigned eps = static_cast<unsigned>(std::gcd(static_cast<u64>(m), pr - 1));
  if (r % eps != 0) throw Error(Errc::EpsilonNotDividingR, "eps = gcd(m, p^r - 1) must divide r");
  const FieldPtr K = gf::mkField(p, eps);
  const Poly ell = primitivePolynomial(K, r / eps);
  const auto image = embedCanonicalSubfield(K, F);
  std::vector<Code> mapped;
  for (Code cf : ell.coeffs()) mapped.push_back(image[cf]);
  Construction c;
  c.tag = Tag::D_lin3;
  c.field = F;
  c.n = static_cast<unsigned>(pr - 1);
  c.g = poly::linearizedAssociate(Poly(F, mapped), eps);
  c.predictedGood = true;
  c.params = {{"r", r}, {"eps", eps}, {"ell", codesJson(ell.coeffs())}};
  detail::attachRoots(c);
  return c;
}

/// H given by coefficients over F. L = x^j H(x^k) must be linearized.
inline Construction constructLinGeneral(const FieldPtr& F, unsigned j, unsigned k, const Poly& H, Code e) {
  const u64 p = F->characteristic();
  if (j == 0 || k == 0 || H.degree() < 0) throw Error(Errc::NotLinearizedShape, "need j, k >= 1 and H nonzero");
  std::vector<Code> lc(j + k * static_cast<std::size_t>(H.degree()) + 1, 0);
  for (std::size_t i = 0; i < H.coeffs().size(); ++i) lc[j + k * i] = H.coeff(i);
  const Poly L(F, lc);
  for (std::size_t i = 0; i < L.coeffs().size(); ++i) {
    if (L.coeff(i) != 0 && !detail::logP(i, p)) throw Error(Errc::NotLinearizedShape, "x^j H(x^k) is not linearized");
  }
  if (L.coeff(1) == 0 || L.degree() < 2) throw Error(Errc::NotLinearizedShape, "L needs a nonzero linear term and degree >= p");
  const Poly u(F, {e, 1});
  const Code s0 = F->mul(F->pow(e, j), F->pow(H.eval(e), k));
  Construction c;
  c.tag = Tag::D_general;
  c.field = F;
  c.n = static_cast<unsigned>(L.degree() - 1);
  c.g = poly::pow(u, j) * poly::pow(poly::compose(H, u), k) - Poly::constant(F, s0);
  c.params = {{"j", j}, {"k", k}, {"H", codesJson(H.coeffs())}, {"e", e}};

  // Splitting context for the nonzero roots of L and a k-th root of e.
  u64 D = 1;
  auto absorb = [&](const Poly& f) {
    for (const auto& [fac, mult] : poly::factorize(f).factors) D = std::lcm(D, static_cast<u64>(fac.degree()));
  };
  absorb(L / Poly::x(F));
  const Poly xk = Poly::monomial(F, 1, k) - Poly::constant(F, e);
  if (e != 0) absorb(xk);
  if (!checkedPow(F->size(), static_cast<unsigned>(D), kRootFieldLimit)) {
    throw Error(Errc::FieldTooLarge, "splitting field of L too large");
  }
  const FieldPtr ctx = D == 1 ? F : gf::mkTower(F, static_cast<unsigned>(D));
  const Code e0 = e == 0 ? 0 : poly::distinctRootsIn(xk, ctx).front();
  std::vector<Code> S;
  for (Code l : poly::distinctRootsIn(L, ctx)) {
    if (l == 0) continue;
    S.push_back(ctx->sub(e, ctx->pow(ctx->sub(e0, l), k)));
  }
  S = sortedUnique(std::move(S));
  std::vector<Code> orbit{S.front()};
  const u64 q = F->size();
  for (Code w = ctx->pow(S.front(), q); w != S.front(); w = ctx->pow(w, q)) orbit.push_back(w);
  orbit = sortedUnique(std::move(orbit));
  c.predictedGood = orbit == S && S.front() != 0;
  c.rootField = ctx;
  c.predictedRoots = std::move(S);
  c.params["e0"] = e0;
  return c;
}

/// General variant seeded by lin2: j = 1, H(t) = t^((p^r-1)/k) - zeta_{q-1}.
inline Construction constructLinGeneralFromLin2(const FieldPtr& F, unsigned r, unsigned k, Code e) {
  const unsigned m = F->absDegree();
  if (r == 0 || m % r != 0) throw Error(Errc::RNotDividingM, "r must divide m");
  const u64 N = *checkedPow(F->characteristic(), r) - 1;
  if (k == 0 || N % k != 0) throw Error(Errc::NotLinearizedShape, "k must divide p^r - 1");
  const Poly H = Poly::monomial(F, 1, N / k) - Poly::constant(F, F->primitiveElement());
  Construction c = constructLinGeneral(F, 1, k, H, e);
  c.params["r"] = r;
  return c;
}

}  // namespace cppforge::families
