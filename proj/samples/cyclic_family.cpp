// (x+e)^3 - e^3 over F_5 and its CPP witnesses in F_25.

#include <iostream>

#include "cppforge/cppforge.hpp"

using namespace cppforge;

int main() {
  const auto F = gf::mkField(5, 1);
  const auto tower = gf::mkTowerDesc(F, 2);
  for (gf::Code e = 1; e < 5; ++e) {
    const auto c = families::constructA1(F, 2, e);
    const auto rep = core::isGood(c.g);
    std::cout << "e=" << e << "  g = " << c.g.toString() << "  good=" << rep.isGood << "\n";
    for (const auto& w : core::witnessesFromGood(c.g, tower)) {
      std::cout << "   b = " << w.b << " (d = " << w.d << "): " << core::verificationName(w.verified) << "\n";
    }
  }
}
