#pragma once

#include <cstdint>

#include "clhopf/convolution/convolution.hpp"
#include "clhopf/hopf_analysis/families.hpp"
#include "clhopf/hopf_analysis/report.hpp"
#include "clhopf/ring/unipoly.hpp"

namespace clhopf {

struct ClaimOutcome {
  bool ok = false;
  std::string witness;
};

template <Scalar R>
struct MainClaims {
  ClaimOutcome restriction;   // (i)
  ClaimOutcome determinant;   // (ii)
  ClaimOutcome trace;         // (iii)
  ClaimOutcome annihilates;   // (iv), first half
  R trace_value;
};

// Evaluates (i)-(iv) for T = mu S of a context with dim V <= 2.
template <Scalar R>
MainClaims<R> main_claims(const BiconvolutionContext<R>& ctx, const EndoMap<R>& t);

// (x + 1)[(x - 1)^n - tau x].
UniPoly stated_polynomial(int n, const Rational& tau);

struct MinimalOutcome {
  bool ok = false;
  bool collapsed = false;  // minimal polynomial is a proper divisor with the same roots
  std::string witness;
};
MinimalOutcome minimal_polynomial_claim(const RingMatrix<Rational>& t, int n);

template <Scalar R>
TheoremReport verify_main_theorem(const BilinearForm<R>& eta, const BilinearForm<R>& xi,
                                  std::uint64_t seed = kDefaultSeed);

// The six-parameter family, symbolically: the Main Theorem plus the family's
// closed-form values of mu S and its transpose.
TheoremReport verify_parametrized_family(std::uint64_t seed = kDefaultSeed);

// Seeded rational sweep: Main Theorem at >= count antipodal points of the
// family, polynomial-path consistency, and antipode existence vs mu != 0
// (including constructed mu = 0 points and xi = eta^{-1}).
TheoremReport main_theorem_sweep(std::uint64_t seed = kDefaultSeed, std::size_t count = 500);

// t = +-rs, z = +-uv.
TheoremReport degenerate_family_report(std::uint64_t seed = kDefaultSeed, std::size_t count = 50);

}  // namespace clhopf
