#pragma once

// Deterministic field presentations. Moduli are the smallest monic
// irreducibles when the lower coefficients are read as a base-q integer
// (constant term least significant), so every run rebuilds identical fields.

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "cppforge/gf/field.hpp"
#include "cppforge/poly/factor.hpp"

namespace cppforge::gf {

/// Smallest monic irreducible of degree n over `base`, as base codes.
inline std::vector<Code> smallestIrreducible(const FieldPtr& base, unsigned n) {
  if (n == 0) throw Error(Errc::DegreeZero, "modulus degree must be positive");
  if (n == 1) return {0, 1};
  const u64 q = base->size();
  auto count = checkedPow(q, n);
  if (!count) throw Error(Errc::FieldTooLarge, "modulus search space too large");
  std::vector<Code> c(n + 1, 0);
  c[n] = 1;
  for (u64 idx = 0; idx < *count; ++idx) {
    u64 t = idx;
    for (unsigned i = 0; i < n; ++i) {
      c[i] = t % q;
      t /= q;
    }
    if (c[0] == 0) continue;
    if (poly::isIrreducible(poly::Poly(base, c))) return c;
  }
  throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
}

namespace detail {

inline std::string fieldKey(const Field& f) {
  std::string k = std::to_string(f.characteristic());
  for (const Field* F = &f; F && !F->isPrimeField(); F = F->base().get()) {
    k += "|";
    for (Code c : F->modulus()) k += std::to_string(c) + ",";
  }
  return k;
}

struct FieldCache {
  std::mutex mu;
  std::map<std::pair<u64, unsigned>, FieldPtr> flat;
  std::map<std::pair<std::string, unsigned>, FieldPtr> towers;
};

inline FieldCache& cache() {
  static FieldCache c;
  return c;
}

}  // namespace detail

/// F_{p^m} as a single extension of F_p, built without consulting the cache.
inline FieldPtr mkFieldUncached(u64 p, unsigned m) {
  if (m == 0) throw Error(Errc::DegreeZero, "extension degree must be positive");
  if (!isPrime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (!checkedPow(p, m, maxFieldSize())) throw Error(Errc::FieldTooLarge, "p^m exceeds field size cap");
  FieldPtr prime = Field::makePrime(p);
  if (m == 1) return prime;
  return Field::makeExtension(prime, smallestIrreducible(prime, m));
}

inline FieldPtr mkField(u64 p, unsigned m) {
  auto& c = detail::cache();
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.flat.find({p, m}); it != c.flat.end()) return it->second;
  }
  FieldPtr f = mkFieldUncached(p, m);
  std::lock_guard lock(c.mu);
  return c.flat.try_emplace({p, m}, f).first->second;
}

/// Degree-n extension of `base` (n = 1 gives a trivial level over base).
inline FieldPtr mkTower(const FieldPtr& base, unsigned n) {
  if (n == 0) throw Error(Errc::DegreeZero, "tower degree must be positive");
  if (!checkedPow(base->size(), n, maxFieldSize())) throw Error(Errc::FieldTooLarge, "tower exceeds field size cap");
  auto& c = detail::cache();
  auto key = std::make_pair(detail::fieldKey(*base), n);
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.towers.find(key); it != c.towers.end()) return it->second;
  }
  FieldPtr f = Field::makeExtension(base, smallestIrreducible(base, n));
  std::lock_guard lock(c.mu);
  return c.towers.try_emplace(key, f).first->second;
}

/// Builds a tower from explicit moduli, checking irreducibility of each level.
inline FieldPtr fieldFromModuli(u64 p, const std::vector<Code>& modulus, const std::vector<Code>& extModulus = {}) {
  FieldPtr prime = Field::makePrime(p);
  FieldPtr base = prime;
  if (modulus.size() > 2) {
    if (!poly::isIrreducible(poly::Poly(prime, modulus))) throw Error(Errc::InvalidArgument, "modulus is reducible");
    base = Field::makeExtension(prime, modulus);
  }
  if (extModulus.empty()) return base;
  if (extModulus.size() == 2 && extModulus[0] == 0 && extModulus[1] == 1) return Field::makeExtension(base, extModulus);
  if (!poly::isIrreducible(poly::Poly(base, extModulus))) throw Error(Errc::InvalidArgument, "extension modulus is reducible");
  return Field::makeExtension(base, extModulus);
}

/// F_q together with its degree-n extension F_{q^n}.
struct Tower {
  FieldPtr base;
  FieldPtr top;
  unsigned n = 1;

  u64 q() const { return base->size(); }
  u64 size() const { return top->size(); }
  /// The exponent (q^n - 1)/(q - 1) + 1.
  u64 d() const { return (top->size() - 1) / (base->size() - 1) + 1; }
};

inline Tower mkTowerDesc(const FieldPtr& base, unsigned n) { return {base, mkTower(base, n), n}; }

}  // namespace cppforge::gf
