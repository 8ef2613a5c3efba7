#pragma once

#include <cstdint>
#include <optional>

#include "clhopf/convolution/convolution.hpp"
#include "clhopf/hopf_analysis/families.hpp"
#include "clhopf/hopf_analysis/report.hpp"
#include "clhopf/ring/unipoly.hpp"

namespace clhopf {

// Crossings are N^2 x N^2 matrices on Cl (x) Cl; column b*N + c is the image
// of e_b (x) e_c.
using CrossingMatrix = RingMatrix<Rational>;

// Delta o m = (m (x) m)(id (x) sigma (x) id)(Delta (x) Delta) as linear
// equations in the entries of sigma; unknown (b'c')*N^2 + (bc) is
// sigma[(b'c'), (bc)].
SparseSystem crossing_system(const BiconvolutionContext<Rational>& ctx);

// Dimension of the solution space of the crossing equations; nullopt when
// they are inconsistent.
std::optional<std::size_t> crossing_solution_dimension(const BiconvolutionContext<Rational>& ctx);

struct CrossingResiduals {
  std::size_t factorization = 0;     // violated equations of crossing_system
  std::size_t multiplicative = 0;    // basis pairs with Delta(xy) != Delta(x) Delta(y)
  std::size_t comultiplicative = 0;  // basis pairs where m fails to be a cogebra map
};

struct CrossingMap {
  CrossingMatrix sigma;
  std::size_t solution_dimension = 0;
  CrossingResiduals residuals;
  bool formula_agrees = false;
};

// (a (x) b)(c (x) d) = sum a b' (x) c' d over sigma(b (x) c) = sum b' (x) c'.
TensorElement<Rational> crossed_product(const BiconvolutionContext<Rational>& ctx, const CrossingMatrix& sigma,
                                        const TensorElement<Rational>& x, const TensorElement<Rational>& y);

// sigma(a (x) b) = sum (S a1 (x) 1) Delta(a2 b1) (1 (x) S b2).
CrossingMatrix crossing_from_antipode(const BiconvolutionContext<Rational>& ctx, const EndoMap<Rational>& s);

CrossingResiduals crossing_residuals(const BiconvolutionContext<Rational>& ctx, const CrossingMatrix& sigma);

// Solves the crossing equations of an antipodal context with dim V <= 3.
CrossingMap build_crossing(const BiconvolutionContext<Rational>& ctx);

struct DegreeInfo {
  UniPoly min_poly;
  int strict_degree = 0;
  int distinct = 0;  // degree of the square-free part: number of distinct eigenvalues
};

DegreeInfo crossing_degree(const CrossingMatrix& sigma);

// mu^3 - 4 mu^2 + mu - 2
UniPoly n1_degree3_cubic();
// p(x) assembled from its factored coefficients.
UniPoly theorem_p();
// The expanded coefficients p is compared with, constant term first.
std::vector<Rational> theorem_p_expected();

TheoremReport crossing_report(const BilinearForm<Rational>& eta, const BilinearForm<Rational>& xi);

TheoremReport crossing_degree_analysis(std::uint64_t seed = kDefaultSeed, std::size_t n1_count = 100,
                                       std::size_t n2_count = 50);

}  // namespace clhopf
