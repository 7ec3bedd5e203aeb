#pragma once

// Witness extraction: roots of v_g for a good g give CPP monomials b^{-1} x^d.

#include <json.hpp>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "cppforge/core/goodness.hpp"
#include "cppforge/core/oracles.hpp"

namespace cppforge::core {

enum class Verification { BruteForce, CriterionOnly, Refuted };

constexpr std::string_view verificationName(Verification v) noexcept {
  switch (v) {
    case Verification::BruteForce: return "BruteForce";
    case Verification::CriterionOnly: return "CriterionOnly";
    case Verification::Refuted: return "Refuted";
  }
  return "Unknown";
}

inline Verification verificationFromName(std::string_view s) {
  if (s == "BruteForce") return Verification::BruteForce;
  if (s == "CriterionOnly") return Verification::CriterionOnly;
  if (s == "Refuted") return Verification::Refuted;
  throw Error(Errc::ParseError, "unknown verification status '" + std::string(s) + "'");
}

struct CppWitness {
  gf::Tower tower;
  u64 d = 0;
  Code b = 0;
  std::string family;
  nlohmann::json params = nlohmann::json::object();
  Verification verified = Verification::CriterionOnly;
  /// (n+1)^4 >= q: the exceptional/CPP equivalence is not claimed here.
  bool outsideHypothesis = false;
};

struct WitnessOptions {
  u64 bruteForceBound = kDefaultBruteForceBound;
  unsigned workers = 1;
  std::string family = "custom";
  nlohmann::json params = nlohmann::json::object();
};

inline bool outsideHypothesis(u64 q, unsigned n) {
  const u128 m = n + 1;
  return m * m * m * m >= q;
}

inline void requireCoprimeDegree(u64 q, unsigned n) {
  if (std::gcd(static_cast<u64>(n) + 1, q - 1) != 1) {
    throw Error(Errc::GcdViolation, "gcd(n+1, q-1) != 1 for q=" + std::to_string(q) + ", n=" + std::to_string(n));
  }
}

/// Brute force within the bound, otherwise criterion-only.
inline Verification verifyWitness(Code b, const gf::Tower& t, u64 bound, unsigned workers = 1) {
  if (t.top->size() > bound) return Verification::CriterionOnly;
  return isCppMonomial(b, t, workers, bound) ? Verification::BruteForce : Verification::Refuted;
}

/// One witness per distinct root of v_g in F_{q^n}, ascending by encoding.
inline std::vector<CppWitness> witnessesFromGood(const Poly& g, const gf::Tower& t, const WitnessOptions& opt = {}) {
  gf::requireSameField(g.F(), *t.base);
  requireCoprimeDegree(t.q(), t.n);
  const GoodnessReport rep = isGood(g);
  if (!rep.isGood) throw Error(Errc::NotGood, std::string("g is not good: ") + std::string(reasonName(rep.reason)));
  const Poly& factor = rep.factorization.factors.front().first;
  if (t.n % static_cast<unsigned>(factor.degree()) != 0) {
    throw Error(Errc::OrbitSizeDoesNotDivideN, "orbit size " + std::to_string(factor.degree()) + " does not divide n=" + std::to_string(t.n));
  }
  std::vector<CppWitness> out;
  for (Code b : poly::distinctRootsIn(factor, t.top)) {
    CppWitness w{t, t.d(), b, opt.family, opt.params, Verification::CriterionOnly, outsideHypothesis(t.q(), t.n)};
    w.verified = verifyWitness(b, t, opt.bruteForceBound, opt.workers);
    out.push_back(std::move(w));
  }
  return out;
}

/// h(x) = c g(cp x) - c g(0), optionally made monic.
inline Poly cppNormalize(const Poly& g, Code c, Code cp, bool makeMonic = false) {
  if (c == 0 || cp == 0) throw Error(Errc::ZeroScalar, "CPP-equivalence scalars must be nonzero");
  const Field& F = g.F();
  std::vector<Code> v(g.coeffs().size());
  Code pw = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = i == 0 ? 0 : F.mul(c, F.mul(g.coeff(i), pw));
    pw = F.mul(pw, cp);
  }
  Poly h(g.field(), std::move(v));
  return makeMonic ? h.monic() : h;
}

/// Least encoding among the F_q^* multiples of b.
inline Code scalarClassRep(Code b, const gf::Tower& t) {
  Code best = b;
  for (Code c = 1; c < t.q(); ++c) best = std::min(best, t.top->mul(c, b));
  return best;
}

inline std::size_t scalarClassCount(const std::vector<CppWitness>& ws) {
  std::vector<std::pair<std::string, Code>> reps;
  for (const auto& w : ws) reps.emplace_back(gf::detail::fieldKey(*w.tower.top), scalarClassRep(w.b, w.tower));
  std::sort(reps.begin(), reps.end());
  return static_cast<std::size_t>(std::unique(reps.begin(), reps.end()) - reps.begin());
}

}  // namespace cppforge::core
