// D_5(x+e, a) - D_5(e, a) over F_27: closed-form roots against factorization.

#include <iostream>

#include "cppforge/cppforge.hpp"

using namespace cppforge;

int main() {
  const auto F = gf::mkField(3, 3);
  const auto c = families::constructA2(F, 4, 1, 1);
  const auto rep = core::isGood(c.g);
  std::cout << "g = " << c.g.toString() << "\npredicted good " << c.predictedGood << ", oracle " << rep.isGood << "\n";
  const auto roots = poly::distinctRootsIn(rep.vg, c.rootField);
  std::cout << "closed-form roots match: " << (roots == c.predictedRoots) << "\n";
  const auto tower = gf::mkTowerDesc(F, 4);
  std::cout << "b = " << c.predictedRoots.front() << " is a CPP coefficient: "
            << core::isCppMonomial(c.predictedRoots.front(), tower) << "\n";
}
