#pragma once

// Integer utilities over machine words: modular powers, primality,
// factorization of field orders and multiplicative orders mod s.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cppforge/error.hpp"

namespace cppforge {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulMod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powMod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulMod(result, base, m);
    base = mulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// base^exp, or nullopt when the result exceeds `limit`.
inline std::optional<u64> checkedPow(u64 base, unsigned exp, u64 limit = ~u64{0}) {
  u128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    if (r > limit) return std::nullopt;
  }
  return static_cast<u64>(r);
}

/// Deterministic Miller-Rabin for the full 64-bit range.
inline bool isPrime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Prime factorization by trial division; stops early once the cofactor is prime.
inline std::vector<std::pair<u64, unsigned>> factorInteger(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; n > 1; d += (d == 2 ? 1 : 2)) {
    if (isPrime(n)) {
      out.emplace_back(n, 1);
      break;
    }
    if (d * d > n) {
      out.emplace_back(n, 1);
      break;
    }
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  return out;
}

inline std::vector<u64> primeDivisors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorInteger(n)) out.push_back(p);
  return out;
}

inline u64 eulerPhi(u64 n) {
  u64 phi = n;
  for (auto [p, e] : factorInteger(n)) phi = phi / p * (p - 1);
  return phi;
}

/// Multiplicative order of q modulo s.
inline u64 ordMod(u64 q, u64 s) {
  if (s == 0) throw Error(Errc::InvalidArgument, "ordMod: modulus must be positive");
  if (s == 1) return 1;
  if (std::gcd(q % s, s) != 1) throw Error(Errc::NotCoprime, "ordMod: gcd(q, s) != 1");
  u64 order = eulerPhi(s);
  for (u64 r : primeDivisors(order)) {
    while (order % r == 0 && powMod(q, order / r, s) == 1) order /= r;
  }
  return order;
}

inline int moebius(u64 n) {
  int mu = 1;
  for (auto [p, e] : factorInteger(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Field-size limits. The hard cap bounds every field this library will
/// construct; CPPFORGE_MAX_FIELD_BITS overrides it (clamped to 62 bits).
inline unsigned maxFieldBits() {
  if (const char* env = std::getenv("CPPFORGE_MAX_FIELD_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v > 62 ? 62 : v);
  }
  return 32;
}

inline u64 maxFieldSize() { return u64{1} << maxFieldBits(); }

inline constexpr u64 kDefaultBruteForceBound = u64{1} << 24;

}  // namespace cppforge
