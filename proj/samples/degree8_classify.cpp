// Degree-8 exceptional and good counts over F_8 and F_16.

#include <iostream>

#include "cppforge/cppforge.hpp"

using namespace cppforge;

int main() {
  for (unsigned m : {3u, 4u}) {
    const auto F = gf::mkField(2, m);
    std::size_t exceptional = 0, good = 0, binomial = 0;
    for (gf::Code A4 = 0; A4 < F->size(); ++A4) {
      for (gf::Code A6 = 0; A6 < F->size(); ++A6) {
        for (gf::Code A7 = 0; A7 < F->size(); ++A7) {
          const auto r = families::classifyDeg8(F, {0, 0, 0, A4, 0, A6, A7});
          exceptional += r.exceptional;
          good += r.good;
          binomial += r.good && A4 == 0 && A6 == 0;
        }
      }
    }
    std::cout << "q=" << F->size() << ": exceptional " << exceptional << ", good " << good
              << ", good with A4 = A6 = 0: " << binomial << "\n";
  }
}
