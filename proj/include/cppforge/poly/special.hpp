#pragma once

// Dickson polynomials, linearized associates and characteristic polynomials
// of tower elements.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cppforge/gf/construct.hpp"
#include "cppforge/poly/poly.hpp"

namespace cppforge::poly {

/// D_k(x, a) = sum_{j <= k/2} k/(k-j) C(k-j, j) (-a)^j x^(k-2j).
inline Poly dicksonPoly(const FieldPtr& F, unsigned k, Code a) {
  using boost::multiprecision::cpp_int;
  if (k == 0) return Poly::constant(F, F->fromInt(2));
  std::vector<Code> c(k + 1, 0);
  const Code minusA = F->neg(a);
  Code apow = 1;
  for (unsigned j = 0; 2 * j <= k; ++j) {
    cpp_int binom = 1;
    for (unsigned t = 0; t < j; ++t) binom = binom * (k - j - t) / (t + 1);
    const cpp_int coef = cpp_int(k) * binom / (k - j);
    const Code cm = static_cast<Code>(static_cast<u64>(coef % F->characteristic()));
    c[k - 2 * j] = F->mul(cm, apow);
    apow = F->mul(apow, minusA);
  }
  return {F, std::move(c)};
}

/// sum c_i x^i  ->  sum c_i x^(p^(eps*i)); coefficients must lie in F_{p^eps}.
inline Poly linearizedAssociate(const Poly& ell, unsigned eps) {
  const Field& F = ell.F();
  if (eps == 0 || F.absDegree() % eps != 0) throw Error(Errc::CoefficientsOutsideSubfield, "F_{p^eps} is not a subfield");
  const u64 p = F.characteristic();
  const auto& c = ell.coeffs();
  if (c.empty()) return ell;
  auto top = checkedPow(p, static_cast<unsigned>(eps * (c.size() - 1)), u64{1} << 20);
  if (!top) throw Error(Errc::InvalidArgument, "linearized degree too large");
  std::vector<Code> out(*top + 1, 0);
  u64 e = 1;
  const u64 step = *checkedPow(p, eps);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (F.frobeniusP(c[i], eps) != c[i]) throw Error(Errc::CoefficientsOutsideSubfield, "coefficient not fixed by x^(p^eps)");
    out[e] = c[i];
    e *= step;
  }
  return {ell.field(), std::move(out)};
}

/// prod_{i<n} (T - b^(q^i)) over the base of the tower.
inline Poly charPoly(Code b, const gf::Tower& t) {
  const Field& top = *t.top;
  if (!top.contains(b)) throw Error(Errc::ContextMismatch, "element outside tower");
  const u64 q = t.base->size();
  Poly r = Poly::constant(t.top, 1);
  Code conj = b;
  for (unsigned i = 0; i < t.n; ++i) {
    r *= Poly::linear(t.top, conj);
    conj = top.pow(conj, q);
  }
  for (Code c : r.coeffs()) {
    if (c >= q) throw Error(Errc::CoefficientsOutsideSubfield, "characteristic polynomial not over the base");
  }
  return r.over(t.base);
}

/// A_0..A_n: the elementary symmetric values of b, b^q, ..., b^(q^(n-1)).
inline std::vector<Code> charPolyOf(Code b, const gf::Tower& t) {
  const Poly cp = charPoly(b, t);
  const Field& B = *t.base;
  std::vector<Code> A(t.n + 1);
  for (unsigned i = 0; i <= t.n; ++i) {
    const Code c = cp.coeff(t.n - i);
    A[i] = (i % 2 == 0) ? c : B.neg(c);
  }
  return A;
}

}  // namespace cppforge::poly
