#pragma once

#include <cstdint>
#include <optional>

#include "clhopf/hopf_analysis/crossing.hpp"

namespace clhopf {

struct SplitOutcome {
  RingMatrix<Rational> composite;  // wedge^eta o Delta^xi
  bool split = false;              // composite == id
  bool condition = false;          // tr(xi o eta) = dim Cl, eta = 0 or xi = 0
  std::optional<bool> switch_idempotent;
  std::optional<bool> crossed_idempotent;  // only when a unique crossing exists
  std::optional<std::size_t> kernel_hits;  // spanning elements mapped to zero by wedge^eta
  std::size_t kernel_total = 0;
};

// xi^ = Delta^xi(1).
TensorElement<Rational> splitting_element(const BiconvolutionContext<Rational>& ctx);

// with_crossing also computes the crossed-algebra idempotency and the kernel
// containment, which need the crossing.
SplitOutcome splitting_check(const BilinearForm<Rational>& eta, const BilinearForm<Rational>& xi,
                             bool with_crossing = true);

// Antisymmetric family at random (t, z) with tz != -1, plus tz = -2, tz = 1,
// eta = 0, xi = 0 and eta = xi = 0.
TheoremReport splitting_sweep(std::uint64_t seed = kDefaultSeed, std::size_t count = 200);

TheoremReport splitting_report(const BilinearForm<Rational>& eta, const BilinearForm<Rational>& xi);

}  // namespace clhopf
