#pragma once

// Factorization over finite fields: squarefree split, distinct-degree split,
// Cantor-Zassenhaus equal-degree split (trace variant in characteristic 2).
// Equal-degree splitting draws from a generator seeded by the field and the
// input, so results are reproducible.

#include <algorithm>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "cppforge/poly/poly.hpp"

namespace cppforge::poly {

struct Factorization {
  FieldPtr field;
  Code unit = 1;
  std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, multiplicity

  Poly expand() const {
    Poly r = Poly::constant(field, unit);
    for (const auto& [f, e] : factors) r *= pow(f, e);
    return r;
  }
  std::size_t distinctCount() const noexcept { return factors.size(); }
};

namespace detail {

inline u64 fnv(u64 h, u64 v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline u64 seedFor(const Poly& f) {
  u64 h = 0xcbf29ce484222325ull;
  for (const Field* F = &f.F(); F; F = F->base().get()) {
    h = fnv(h, F->characteristic());
    for (Code c : F->modulus()) h = fnv(h, c);
  }
  for (Code c : f.coeffs()) h = fnv(h, c);
  return h;
}

inline bool lessPoly(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                      b.coeffs().rend());
}

/// Coefficient-wise p-th root of a polynomial whose exponents are all multiples of p.
inline Poly pthRoot(const Poly& f) {
  const Field& F = f.F();
  const u64 p = F.characteristic();
  const unsigned k = F.absDegree();
  std::vector<Code> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(F.frobeniusP(f.coeff(i), k - 1));
  return {f.field(), std::move(v)};
}

inline Poly randomPoly(const FieldPtr& F, int degBound, std::mt19937_64& rng) {
  std::uniform_int_distribution<Code> dist(0, F->size() - 1);
  std::vector<Code> v(static_cast<std::size_t>(degBound));
  for (auto& c : v) c = dist(rng);
  return {F, std::move(v)};
}

}  // namespace detail

/// x^(q^k) mod m, q the size of m's coefficient field.
inline Poly frobeniusX(const Poly& m, unsigned k) {
  const u64 q = m.F().size();
  Poly h = Poly::x(m.field()) % m;
  for (unsigned i = 0; i < k; ++i) h = powMod(h, q, m);
  return h;
}

/// Squarefree decomposition of a nonzero polynomial: (monic squarefree part, multiplicity).
inline std::vector<std::pair<Poly, unsigned>> squarefreeDecomposition(const Poly& f0) {
  if (f0.isZero()) throw Error(Errc::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly f = f0.monic();
  if (f.degree() < 1) return out;
  const unsigned p = static_cast<unsigned>(f.F().characteristic());
  Poly c = gcd(f, derivative(f));
  Poly w = f / c;
  unsigned i = 1;
  while (!w.isOne()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.isOne()) {
    for (auto& [g, e] : squarefreeDecomposition(detail::pthRoot(c))) out.emplace_back(g, e * p);
  }
  return out;
}

/// Product of the distinct monic irreducible factors.
inline Poly squarefreePart(const Poly& f) {
  Poly r = Poly::constant(f.field(), 1);
  for (const auto& [g, e] : squarefreeDecomposition(f)) r *= g;
  return r;
}

/// Splits a monic squarefree polynomial into (product of all degree-d factors, d).
inline std::vector<std::pair<Poly, unsigned>> distinctDegree(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly rest = f.monic();
  const u64 q = f.F().size();
  Poly h = Poly::x(f.field()) % rest;
  const Poly x = Poly::x(f.field());
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
    h = powMod(h, q, rest);
    Poly g = gcd(rest, h - x);
    if (!g.isOne()) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

/// Splits a monic squarefree product of degree-d irreducibles into its factors.
inline std::vector<Poly> equalDegree(const Poly& f, unsigned d, std::mt19937_64& rng) {
  if (f.degree() <= static_cast<int>(d)) return {f};
  const FieldPtr& F = f.field();
  const u64 q = F->size();
  const bool char2 = F->characteristic() == 2;
  const unsigned traceTerms = F->absDegree() * d;
  for (;;) {
    Poly a = detail::randomPoly(F, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b;
    if (char2) {
      Poly t = a % f;
      b = t;
      for (unsigned i = 1; i < traceTerms; ++i) {
        t = mulMod(t, t, f);
        b += t;
      }
    } else {
      Poly conj = a % f;
      Poly norm = conj;
      for (unsigned i = 1; i < d; ++i) {
        conj = powMod(conj, q, f);
        norm = mulMod(norm, conj, f);
      }
      b = powMod(norm, (q - 1) / 2, f) - Poly::constant(F, 1);
    }
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equalDegree(g, d, rng);
      auto right = equalDegree(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

inline std::vector<Poly> equalDegree(const Poly& f, unsigned d) {
  std::mt19937_64 rng(detail::seedFor(f));
  return equalDegree(f, d, rng);
}

inline Factorization factorize(const Poly& f) {
  if (f.isZero()) throw Error(Errc::ZeroPolynomial, "factorize of zero");
  Factorization out{f.field(), f.lead(), {}};
  std::mt19937_64 rng(detail::seedFor(f));
  for (const auto& [sq, mult] : squarefreeDecomposition(f)) {
    for (const auto& [part, d] : distinctDegree(sq)) {
      for (auto& g : equalDegree(part, d, rng)) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return detail::lessPoly(a.first, b.first); });
  // Merge equal irreducibles arising from different squarefree layers.
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& fe : out.factors) {
    if (!merged.empty() && merged.back().first == fe.first) merged.back().second += fe.second;
    else merged.push_back(std::move(fe));
  }
  out.factors = std::move(merged);
  return out;
}

/// Rabin's test.
inline bool isIrreducible(const Poly& f0) {
  if (f0.isZero()) throw Error(Errc::ZeroPolynomial, "irreducibility of zero");
  if (f0.degree() < 1) throw Error(Errc::ConstantPolynomial, "irreducibility of a constant");
  const Poly f = f0.monic();
  const unsigned n = static_cast<unsigned>(f.degree());
  if (n == 1) return true;
  const u64 q = f.F().size();
  const Poly x = Poly::x(f.field());
  std::vector<Poly> frob(n + 1, x % f);
  for (unsigned i = 1; i <= n; ++i) frob[i] = powMod(frob[i - 1], q, f);
  if (!(frob[n] - x).isZero()) return false;
  for (u64 r : primeDivisors(n)) {
    if (!gcd(f, frob[n / r] - x).isOne()) return false;
  }
  return true;
}

/// Roots of f in ctx (which must contain f's field), with multiplicity, ascending.
inline std::vector<Code> rootsIn(const Poly& f, const FieldPtr& ctx) {
  if (f.isZero()) throw Error(Errc::ZeroPolynomial, "roots of zero");
  if (!ctx->hasSubfield(f.F())) throw Error(Errc::NotAnExtension, ctx->describe() + " does not contain " + f.F().describe());
  const Poly g = f.over(ctx);
  std::vector<Code> roots;
  if (g.degree() < 1) return roots;
  const Poly x = Poly::x(ctx);
  for (const auto& [sq, mult] : squarefreeDecomposition(g)) {
    Poly lin = gcd(sq, powMod(x, ctx->size(), sq) - x);
    if (lin.degree() < 1) continue;
    for (const auto& r : equalDegree(lin, 1)) {
      const Code root = ctx->neg(r.coeff(0));
      for (unsigned i = 0; i < mult; ++i) roots.push_back(root);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Distinct roots of f in ctx, ascending.
inline std::vector<Code> distinctRootsIn(const Poly& f, const FieldPtr& ctx) {
  auto r = rootsIn(f, ctx);
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

}  // namespace cppforge::poly
