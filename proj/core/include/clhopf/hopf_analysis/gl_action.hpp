#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "clhopf/hopf_analysis/families.hpp"
#include "clhopf/hopf_analysis/report.hpp"

namespace clhopf {

struct SingularTransform : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// eta -> g^T eta g, xi -> g xi g^T.
template <Scalar R>
FormPair<R> gl_transform(const RingMatrix<R>& g, const BilinearForm<R>& eta, const BilinearForm<R>& xi) {
  if (!g.is_square() || g.rows() != static_cast<std::size_t>(eta.dim_v()) || eta.dim_v() != xi.dim_v())
    throw DimensionError("gl_transform: g does not match dim V");
  if (det(g).is_zero()) throw SingularTransform("gl_transform: g is singular");
  return {BilinearForm<R>(eta.role(), g.transposed() * eta.matrix() * g),
          BilinearForm<R>(xi.role(), g * xi.matrix() * g.transposed())};
}

// An invertible g with g^T a g = b for rank-one 2x2 matrices a = x y^T and
// b = x' y'^T, found by solving g^T [x y] = [x' y']; nullopt when x, y are
// dependent or the solution is singular.
std::optional<RingMatrix<Rational>> rank_one_congruence(const RingMatrix<Rational>& a, const RingMatrix<Rational>& b);

// Identity, the diagonal example, the rank-one congruence and orbit
// observations of mu, antipodal status and tr(mu S).
TheoremReport gl_report(std::uint64_t seed = kDefaultSeed, std::size_t count = 20);

}  // namespace clhopf
