#include "clhopf/exterior/algebra.hpp"

namespace clhopf {

std::vector<Split> grassmann_splits(Blade a) {
  std::vector<Split> out;
  // Enumerate the submasks of a, including 0 and a itself.
  for (Blade b = a;; b = (b - 1) & a) {
    out.push_back({b, a & ~b, wedge_sign(b, a & ~b)});
    if (b == 0) break;
  }
  return out;
}

}  // namespace clhopf
