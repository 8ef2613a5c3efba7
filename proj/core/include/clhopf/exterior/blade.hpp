#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace clhopf {

inline constexpr int kMaxDim = 6;

// Bit i set <=> e_{i+1} is a factor. The empty mask is the unit blade.
using Blade = std::uint32_t;

inline int grade(Blade b) { return __builtin_popcount(b); }
inline std::size_t basis_size(int n) { return std::size_t{1} << n; }

void check_dim(int n);

// Sign of e_A ^ e_B relative to e_{A|B}: (-1)^{#pairs i in A, j in B, i > j};
// 0 when A and B overlap.
int wedge_sign(Blade a, Blade b);

// "1", "e1", "e12", ...
std::string blade_name(Blade b);
Blade parse_blade(std::string_view name, int n);

// All blades ordered by grade, then by mask; matrix indices use the mask
// itself, this order is only for display.
std::vector<Blade> blades_by_grade(int n);

}  // namespace clhopf
