#pragma once

// Brute-force permutation and complete-permutation oracles.

#include <atomic>
#include <numeric>
#include <thread>
#include <vector>

#include "cppforge/gf/construct.hpp"
#include "cppforge/poly/poly.hpp"

namespace cppforge::core {

using gf::Code;
using gf::Field;
using gf::FieldPtr;
using poly::Poly;

/// Injectivity of `map` on all of F. The domain is split into `workers`
/// contiguous ranges marking a shared atomic bitmap; the verdict does not
/// depend on the split.
template <class Map>
bool isInjective(const Field& F, Map&& map, unsigned workers = 1, u64 bound = kDefaultBruteForceBound) {
  const u64 N = F.size();
  if (N > bound) throw Error(Errc::FieldTooLarge, F.describe() + " exceeds the brute-force bound");
  std::vector<std::atomic<u64>> bits((N + 63) / 64);
  std::atomic<bool> collision{false};
  auto run = [&](u64 lo, u64 hi) {
    for (u64 x = lo; x < hi && !collision.load(std::memory_order_relaxed); ++x) {
      const Code y = map(x);
      const u64 mask = u64{1} << (y & 63);
      if (bits[y >> 6].fetch_or(mask, std::memory_order_relaxed) & mask) collision.store(true, std::memory_order_relaxed);
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1 || N < 4096) {
    run(0, N);
  } else {
    std::vector<std::thread> pool;
    const u64 chunk = (N + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const u64 lo = std::min(N, w * chunk), hi = std::min(N, lo + chunk);
      pool.emplace_back(run, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  return !collision.load();
}

/// f as a map on ctx, where ctx contains the coefficient field of f.
inline bool isPermutation(const Poly& f, const FieldPtr& ctx, unsigned workers = 1, u64 bound = kDefaultBruteForceBound) {
  const Poly g = f.over(ctx);
  return isInjective(*ctx, [&](Code x) { return g.eval(x); }, workers, bound);
}

inline bool isCppPoly(const Poly& f, const FieldPtr& ctx, unsigned workers = 1, u64 bound = kDefaultBruteForceBound) {
  const Poly g = f.over(ctx);
  return isPermutation(g, ctx, workers, bound) && isPermutation(g + Poly::x(ctx), ctx, workers, bound);
}

/// b^{-1} x^d is a CPP of F_{q^n}, d = (q^n - 1)/(q - 1) + 1.
inline bool isCppMonomial(Code b, const gf::Tower& t, unsigned workers = 1, u64 bound = kDefaultBruteForceBound) {
  if (b == 0) throw Error(Errc::ZeroCoefficient, "b must be nonzero");
  const Field& F = *t.top;
  if (!F.contains(b)) throw Error(Errc::ContextMismatch, "b outside the tower");
  if (F.size() > bound) throw Error(Errc::FieldTooLarge, F.describe() + " exceeds the brute-force bound");
  const u64 d = t.d();
  if (std::gcd(d, F.size() - 1) != 1) return false;
  const Code binv = F.inv(b);
  return isInjective(F, [&](Code x) { return F.add(F.mul(binv, F.pow(x, d)), x); }, workers, bound);
}

struct ExceptionalCheck {
  bool allPassed = true;
  std::vector<unsigned> tested;
  std::vector<unsigned> skipped;
  std::vector<unsigned> failed;
  /// A failure over the base field itself rules exceptionality out.
  bool conclusive = false;
  bool heuristic = true;
};

/// Permutation behaviour of f over F_{q^k}, k = 1..K, skipping extensions
/// beyond the brute-force bound. A necessary-condition proxy only.
inline ExceptionalCheck exceptionalNecessary(const Poly& f, unsigned K, u64 bound = kDefaultBruteForceBound) {
  if (K == 0) throw Error(Errc::InvalidArgument, "K must be positive");
  ExceptionalCheck out;
  const FieldPtr& F = f.field();
  for (unsigned k = 1; k <= K; ++k) {
    auto size = checkedPow(F->size(), k, bound);
    if (!size) {
      out.skipped.push_back(k);
      continue;
    }
    const FieldPtr ext = k == 1 ? F : gf::mkTower(F, k);
    out.tested.push_back(k);
    if (!isPermutation(f, ext, 1, bound)) {
      out.failed.push_back(k);
      out.allPassed = false;
      if (k == 1) out.conclusive = true;
    }
  }
  return out;
}

}  // namespace cppforge::core
