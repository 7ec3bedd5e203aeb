#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cppforge/core/goodness.hpp"
#include "cppforge/core/oracles.hpp"
#include "cppforge/core/witness.hpp"

using namespace cppforge;
using gf::Code;
using poly::Poly;

namespace {

Poly P(const gf::FieldPtr& F, std::vector<Code> c) { return Poly(F, std::move(c)); }

Poly randomG(const gf::FieldPtr& F, int deg, std::mt19937_64& rng) {
  std::vector<Code> c(deg + 1);
  c[0] = 0;
  for (int i = 1; i < deg; ++i) c[i] = rng() % F->size();
  c[deg] = 1 + rng() % (F->size() - 1);
  return P(F, c);
}

}  // namespace

TEST(VPoly, SmallExamples) {
  const auto F5 = gf::mkField(5, 1);
  EXPECT_EQ(core::vPoly(P(F5, {0, 0, 0, 1})), P(F5, {0, 0, 1}));
  const Poly g = poly::pow(P(F5, {1, 1}), 3) - Poly::constant(F5, 1);
  EXPECT_EQ(core::vPoly(g), P(F5, {3, 2, 1}));
  const auto F8 = gf::mkField(2, 3);
  EXPECT_EQ(core::vPoly(P(F8, {0, 5, 0, 0, 0, 0, 0, 0, 1})), P(F8, {5, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_THROW(core::vPoly(Poly::constant(F5, 1)), Error);
}

TEST(VPoly, DegreeAndConstantTerm) {
  const auto F = gf::mkField(3, 2);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const Poly g = randomG(F, 2 + rng() % 8, rng);
    const Poly v = core::vPoly(g);
    EXPECT_EQ(v.degree(), g.degree() - 1);
    EXPECT_EQ(v.coeff(0), g.coeff(1));
    // v(x) * (-x) = g(-x) - g(0)
    const Code x = rng() % F->size();
    EXPECT_EQ(F->mul(v.eval(x), F->neg(x)), F->sub(g.eval(F->neg(x)), g.coeff(0)));
  }
}

TEST(IsGood, Verdicts) {
  const auto F5 = gf::mkField(5, 1);
  const Poly g = poly::pow(P(F5, {1, 1}), 3) - Poly::constant(F5, 1);
  auto rep = core::isGood(g);
  EXPECT_TRUE(rep.isGood);
  EXPECT_EQ(rep.orbitSizes, (std::vector<unsigned>{2}));

  const auto F8 = gf::mkField(2, 3);
  rep = core::isGood(P(F8, {0, 1, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_FALSE(rep.isGood);
  EXPECT_EQ(rep.reason, core::GoodReason::RootInBaseField);
  EXPECT_EQ(rep.orbitSizes, std::vector<unsigned>(7, 1));

  const auto F4 = gf::mkField(2, 2);
  EXPECT_TRUE(core::isGood(P(F4, {0, 2, 0, 0, 1})).isGood);  // x^4 + w x

  EXPECT_EQ(core::isGood(P(F5, {1, 1, 1})).reason, core::GoodReason::GZeroNonzero);
  EXPECT_EQ(core::isGood(P(F5, {0, 0, 1, 1})).reason, core::GoodReason::GPrimeZero);
  // v = (x^2+x+1)(x^2+2) over F_5: two orbits of size 2.
  const Poly v = P(F5, {1, 1, 1}) * P(F5, {2, 0, 1});
  std::vector<Code> gc{0};
  for (int j = 0; j <= v.degree(); ++j) gc.push_back(j % 2 ? F5->neg(v.coeff(j)) : v.coeff(j));
  EXPECT_EQ(core::isGood(P(F5, gc)).reason, core::GoodReason::MultipleOrbits);
  // Repeated factors count once: v = (x^2+2)^2.
  const Poly w = poly::pow(P(F5, {2, 0, 1}), 2);
  std::vector<Code> hc{0};
  for (int j = 0; j <= w.degree(); ++j) hc.push_back(j % 2 ? F5->neg(w.coeff(j)) : w.coeff(j));
  EXPECT_TRUE(core::isGood(P(F5, hc)).isGood);
  EXPECT_THROW(core::isGood(P(F5, {0, 1})), Error);
}

TEST(OrbitStructure, Examples) {
  const auto F5 = gf::mkField(5, 1);
  auto orbits = core::orbitStructure(P(F5, {3, 2, 1}));
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].size, 2u);
  ASSERT_TRUE(orbits[0].representative.has_value());
  EXPECT_EQ(P(F5, {3, 2, 1}).over(orbits[0].representative->field()).eval(orbits[0].representative->code()), 0u);

  const auto F8 = gf::mkField(2, 3);
  orbits = core::orbitStructure(P(F8, {1, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(orbits.size(), 7u);
  for (const auto& o : orbits) EXPECT_EQ(o.size, 1u);

  const auto F2 = gf::mkField(2, 1);
  orbits = core::orbitStructure(poly::pow(P(F2, {1, 1, 1}), 2));
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].size, 2u);
}

TEST(OrbitStructure, CountingBeyondEnumerationLimit) {
  const auto F9 = gf::mkField(3, 2);
  // x^8 + 2x + 1: counted by Moebius inversion when enumeration is capped.
  const Poly f = P(F9, {1, 2, 0, 0, 0, 0, 0, 0, 1});
  const auto full = core::orbitStructure(f, {u64{1} << 30, false});
  const auto counted = core::orbitStructure(f, {1, false});
  ASSERT_EQ(full.size(), counted.size());
  for (std::size_t i = 0; i < full.size(); ++i) EXPECT_EQ(full[i].size, counted[i].size);
  EXPECT_THROW(core::orbitStructure(f, {1, true}), Error);
}

TEST(OrbitStructure, MatchesGoodnessOnSmallFields) {
  for (auto [p, m] : {std::pair<u64, unsigned>{2, 2}, {5, 1}, {3, 2}}) {
    const auto F = gf::mkField(p, m);
    std::mt19937_64 rng(p * 31 + m);
    for (int it = 0; it < 150; ++it) {
      const Poly g = randomG(F, 3 + rng() % 5, rng);
      if (g.coeff(1) == 0) continue;
      EXPECT_EQ(core::isGood(g).isGood, core::orbitStructure(core::vPoly(g)).size() == 1) << g.toString();
    }
  }
}

TEST(Oracles, PermutationExamples) {
  const auto F3 = gf::mkField(3, 1), F5 = gf::mkField(5, 1), F2 = gf::mkField(2, 1);
  EXPECT_TRUE(core::isPermutation(Poly::x(F5), F5));
  EXPECT_FALSE(core::isPermutation(P(F3, {0, 0, 1}), F3));
  EXPECT_TRUE(core::isPermutation(P(F5, {0, 0, 0, 1}), F5));
  EXPECT_TRUE(core::isCppPoly(Poly::x(F3), F3));
  EXPECT_FALSE(core::isCppPoly(Poly::x(F2), F2));
  EXPECT_TRUE(core::isCppPoly(P(F5, {0, 2}), F5));
  EXPECT_THROW(core::isPermutation(Poly::x(F5), gf::mkTower(F5, 2), 1, 10), Error);
}

// Witness codes frozen from the pure-Python oracle.
TEST(Oracles, CppMonomialFrozenWitnesses) {
  const auto t25 = gf::mkTowerDesc(gf::mkField(5, 1), 2);
  EXPECT_EQ(t25.d(), 7u);
  EXPECT_EQ(t25.top->modulus(), (std::vector<Code>{2, 0, 1}));
  for (Code b : {9, 24, 13, 18, 12, 17, 6, 21}) EXPECT_TRUE(core::isCppMonomial(b, t25)) << b;
  EXPECT_FALSE(core::isCppMonomial(1, t25));
  EXPECT_THROW(core::isCppMonomial(0, t25), Error);

  const auto t64 = gf::mkTowerDesc(gf::mkField(2, 2), 3);
  EXPECT_EQ(t64.d(), 22u);
  for (Code b : {4, 8, 12}) EXPECT_TRUE(core::isCppMonomial(b, t64)) << b;
}

TEST(Oracles, WorkerCountDoesNotChangeVerdict) {
  const auto t = gf::mkTowerDesc(gf::mkField(2, 2), 7);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 6; ++it) {
    const Code b = 1 + rng() % (t.size() - 1);
    EXPECT_EQ(core::isCppMonomial(b, t, 1), core::isCppMonomial(b, t, 4));
  }
}

TEST(Oracles, ExceptionalNecessary) {
  const auto F5 = gf::mkField(5, 1);
  auto r = core::exceptionalNecessary(P(F5, {0, 0, 0, 1}), 2);
  EXPECT_FALSE(r.allPassed);
  EXPECT_EQ(r.failed, (std::vector<unsigned>{2}));
  EXPECT_FALSE(r.conclusive);
  EXPECT_TRUE(r.heuristic);
  EXPECT_TRUE(core::exceptionalNecessary(Poly::x(F5), 4).allPassed);
  // A good quadrinomial over F_4 (x^7 + x^3 + x + w irreducible).
  const auto F4 = gf::mkField(2, 2);
  r = core::exceptionalNecessary(P(F4, {0, 2, 1, 0, 1, 0, 0, 0, 1}), 3);
  EXPECT_TRUE(r.allPassed);
  EXPECT_EQ(r.tested, (std::vector<unsigned>{1, 2, 3}));
  r = core::exceptionalNecessary(Poly::x(F5), 12, 1000);
  EXPECT_EQ(r.skipped.size(), 8u);
  EXPECT_THROW(core::exceptionalNecessary(Poly::x(F5), 0), Error);
}

TEST(Witness, FromGood) {
  const auto F5 = gf::mkField(5, 1);
  const Poly g = poly::pow(P(F5, {1, 1}), 3) - Poly::constant(F5, 1);
  const auto ws = core::witnessesFromGood(g, gf::mkTowerDesc(F5, 2));
  ASSERT_EQ(ws.size(), 2u);
  for (const auto& w : ws) {
    EXPECT_EQ(w.verified, core::Verification::BruteForce);
    EXPECT_EQ(w.d, 7u);
    EXPECT_TRUE(w.outsideHypothesis);
  }

  const auto F4 = gf::mkField(2, 2);
  const Poly h = P(F4, {0, 2, 0, 0, 1});
  const auto w3 = core::witnessesFromGood(h, gf::mkTowerDesc(F4, 3));
  ASSERT_EQ(w3.size(), 3u);
  std::vector<Code> codes;
  for (const auto& w : w3) {
    EXPECT_EQ(w.verified, core::Verification::BruteForce);
    EXPECT_EQ(w.d, 22u);
    codes.push_back(w.b);
  }
  EXPECT_EQ(codes, (std::vector<Code>{4, 8, 12}));
  // Orbit size 3 divides n = 6 as well; the witness elements are the same.
  const auto w6 = core::witnessesFromGood(h, gf::mkTowerDesc(F4, 6), {1, 1, "custom", {}});
  ASSERT_EQ(w6.size(), 3u);
  for (const auto& w : w6) EXPECT_EQ(w.verified, core::Verification::CriterionOnly);
}

TEST(Witness, Errors) {
  const auto F4 = gf::mkField(2, 2);
  const auto F5 = gf::mkField(5, 1);
  try {
    core::witnessesFromGood(P(F4, {0, 2, 0, 0, 1}), gf::mkTowerDesc(F4, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GcdViolation);  // gcd(3, 3) != 1
  }
  try {
    core::witnessesFromGood(P(F4, {0, 2, 0, 0, 1}), gf::mkTowerDesc(F4, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OrbitSizeDoesNotDivideN);
  }
  try {
    core::witnessesFromGood(P(F5, {0, 0, 0, 1}), gf::mkTowerDesc(F5, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotGood);
  }
}

TEST(CppNormalize, ExamplesAndInvariance) {
  const auto F5 = gf::mkField(5, 1);
  const Poly x3 = P(F5, {0, 0, 0, 1});
  EXPECT_EQ(core::cppNormalize(x3, 1, 2), P(F5, {0, 0, 0, 3}));
  EXPECT_EQ(core::cppNormalize(x3, 1, 1), x3);
  EXPECT_THROW(core::cppNormalize(x3, 0, 1), Error);

  const auto F = gf::mkField(3, 2);
  std::mt19937_64 rng(17);
  int goodSeen = 0;
  for (int it = 0; it < 100; ++it) {
    Poly g = randomG(F, 3 + rng() % 5, rng);
    const Code c = 1 + rng() % 8, cp = 1 + rng() % 8;
    const Poly h = core::cppNormalize(g, c, cp);
    const bool good = core::isGood(g).isGood;
    EXPECT_EQ(core::isGood(h).isGood, good);
    if (!good) continue;
    ++goodSeen;
    // Roots of v_h are the roots of v_g divided by cp.
    const auto ext = gf::mkTower(F, static_cast<unsigned>(core::isGood(g).orbitSizes.front()));
    std::set<Code> scaled;
    for (Code r : poly::distinctRootsIn(core::vPoly(g), ext)) scaled.insert(ext->mul(r, ext->inv(cp)));
    const auto rh = poly::distinctRootsIn(core::vPoly(h), ext);
    EXPECT_EQ(std::set<Code>(rh.begin(), rh.end()), scaled);
  }
  EXPECT_GT(goodSeen, 0);
}

TEST(Witness, ScalarClasses) {
  const auto t = gf::mkTowerDesc(gf::mkField(5, 1), 2);
  std::vector<core::CppWitness> ws;
  for (Code b : {9, 24, 13, 18, 12, 17, 6, 21}) ws.push_back({t, t.d(), b});
  EXPECT_EQ(core::scalarClassCount(ws), 2u);
  EXPECT_EQ(core::scalarClassRep(9, t), core::scalarClassRep(t.top->mul(3, 9), t));
}

TEST(Witness, VerificationNames) {
  for (auto v : {core::Verification::BruteForce, core::Verification::CriterionOnly, core::Verification::Refuted}) {
    EXPECT_EQ(core::verificationFromName(core::verificationName(v)), v);
  }
  EXPECT_THROW(core::verificationFromName("Maybe"), Error);
  EXPECT_TRUE(core::outsideHypothesis(625, 4));
  EXPECT_FALSE(core::outsideHypothesis(626, 4));
}
