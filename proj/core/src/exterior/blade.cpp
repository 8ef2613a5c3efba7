#include "clhopf/exterior/blade.hpp"

#include <algorithm>
#include <stdexcept>

#include "clhopf/ring/errors.hpp"

namespace clhopf {

void check_dim(int n) {
  if (n < 1 || n > kMaxDim)
    throw DimensionError("dim V must be between 1 and " + std::to_string(kMaxDim) + ", got " +
                         std::to_string(n));
}

int wedge_sign(Blade a, Blade b) {
  if ((a & b) != 0) return 0;
  int swaps = 0;
  for (Blade rest = a; rest != 0; rest &= rest - 1) {
    const int i = __builtin_ctz(rest);
    swaps += __builtin_popcount(b & ((Blade{1} << i) - 1));
  }
  return (swaps & 1) != 0 ? -1 : 1;
}

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string out = "e";
  for (int i = 0; i < 32; ++i)
    if ((b >> i) & 1u) out += std::to_string(i + 1);
  return out;
}

Blade parse_blade(std::string_view name, int n) {
  if (name == "1") return 0;
  if (name.size() < 2 || name.front() != 'e')
    throw std::invalid_argument("malformed blade name '" + std::string(name) + "'");
  Blade b = 0;
  int last = 0;
  for (char c : name.substr(1)) {
    const int idx = c - '0';
    if (idx < 1 || idx > n || idx <= last)
      throw std::invalid_argument("malformed blade name '" + std::string(name) + "'");
    b |= Blade{1} << (idx - 1);
    last = idx;
  }
  return b;
}

std::vector<Blade> blades_by_grade(int n) {
  std::vector<Blade> out(basis_size(n));
  for (Blade b = 0; b < out.size(); ++b) out[b] = b;
  std::stable_sort(out.begin(), out.end(), [](Blade a, Blade b) { return grade(a) < grade(b); });
  return out;
}

}  // namespace clhopf
