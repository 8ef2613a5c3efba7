#pragma once

#include <optional>
#include <stdexcept>

#include "clhopf/cliffordization/forms.hpp"
#include "clhopf/exterior/algebra.hpp"

namespace clhopf {

// A structure-map identity that must hold by construction failed; indicates a
// sign-convention bug, not bad input.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct NoCounit : std::runtime_error {
  NoCounit() : std::runtime_error("coproduct admits no counit") {}
};

// e_A . e_B = sum  s(A1,A2) s(B1,B2) eta^(A2,B1) (e_A1 ^ e_B2)
// over the Grassmann splits A = A1|A2, B = B1|B2.
template <Scalar R>
RingMatrix<R> clifford_product_matrix(const ExtendedForm<R>& eta) {
  const int n = eta.dim_v();
  const std::size_t big = basis_size(n);
  RingMatrix<R> m(big, big * big);
  std::vector<std::vector<Split>> splits(big);
  for (Blade a = 0; a < big; ++a) splits[a] = grassmann_splits(a);
  for (Blade a = 0; a < big; ++a)
    for (Blade b = 0; b < big; ++b) {
      const std::size_t col = pair_index(n, a, b);
      for (const auto& sa : splits[a])
        for (const auto& sb : splits[b]) {
          const R& loop = eta.value(sa.right, sb.left);
          if (loop.is_zero()) continue;
          const int ws = wedge_sign(sa.left, sb.right);
          if (ws == 0) continue;
          const int s = sa.sign * sb.sign * ws;
          auto& cell = m(sa.left | sb.right, col);
          cell = s > 0 ? cell + loop : cell - loop;
        }
    }
  return m;
}

// D(e_A) = sum s(A1,A2) xi^(P,Q) (e_A1 ^ e_P) (x) (e_Q ^ e_A2).
template <Scalar R>
RingMatrix<R> clifford_coproduct_matrix(const ExtendedForm<R>& xi) {
  const int n = xi.dim_v();
  const std::size_t big = basis_size(n);
  RingMatrix<R> m(big * big, big);
  for (Blade a = 0; a < big; ++a)
    for (const auto& sa : grassmann_splits(a))
      for (Blade p = 0; p < big; ++p)
        for (Blade q = 0; q < big; ++q) {
          const R& cap = xi.value(p, q);
          if (cap.is_zero()) continue;
          const int s1 = wedge_sign(sa.left, p), s2 = wedge_sign(q, sa.right);
          if (s1 == 0 || s2 == 0) continue;
          const int s = sa.sign * s1 * s2;
          auto& cell = m(pair_index(n, sa.left | p, q | sa.right), a);
          cell = s > 0 ? cell + cap : cell - cap;
        }
  return m;
}

// The same coproduct obtained as the transpose of the product that xi
// induces on the dual exterior algebra.
template <Scalar R>
RingMatrix<R> clifford_coproduct_by_duality(const ExtendedForm<R>& xi) {
  return duality_transpose(clifford_product_matrix(xi));
}

template <Scalar R>
Multivector<R> clifford_product(const BilinearForm<R>& eta, const Multivector<R>& x, const Multivector<R>& y) {
  if (eta.dim_v() != x.dim_v()) throw DimensionError("form and multivector dims differ");
  return multiply(clifford_product_matrix(extend_form(eta)), x, y);
}

template <Scalar R>
TensorElement<R> clifford_coproduct(const BilinearForm<R>& xi, const Multivector<R>& x) {
  if (xi.dim_v() != x.dim_v()) throw DimensionError("form and multivector dims differ");
  return comultiply(clifford_coproduct_matrix(extend_form(xi)), x);
}

// Solves (eps (x) id) D = id = (id (x) eps) D for eps.
template <Scalar R>
std::vector<R> derive_counit(const RingMatrix<R>& coproduct) {
  const std::size_t big = coproduct.cols();
  if (coproduct.rows() != big * big) throw DimensionError("coproduct table has the wrong shape");
  RingMatrix<R> sys(2 * big * big, big);
  std::vector<R> rhs(2 * big * big, R(0));
  std::size_t row = 0;
  for (std::size_t a = 0; a < big; ++a) {
    for (std::size_t c = 0; c < big; ++c, ++row) {
      for (std::size_t b = 0; b < big; ++b) sys(row, b) = coproduct(b * big + c, a);
      if (a == c) rhs[row] = R(1);
    }
    for (std::size_t b = 0; b < big; ++b, ++row) {
      for (std::size_t c = 0; c < big; ++c) sys(row, c) = coproduct(b * big + c, a);
      if (a == b) rhs[row] = R(1);
    }
  }
  auto res = solve_linear(sys, rhs);
  if (res.status == SolveStatus::NoSolution) throw NoCounit();
  if (res.status == SolveStatus::NonUnique) throw InvariantViolation("counit is not unique");
  std::vector<R> eps(big);
  for (std::size_t b = 0; b < big; ++b) eps[b] = exact_quotient(res.solution[b], res.denominator);
  return eps;
}

template <Scalar R>
RingMatrix<R> composite(const BilinearForm<R>& outer, const BilinearForm<R>& inner) {
  return outer.matrix() * inner.matrix();
}

// det(id - xi o eta), cross-checked against det(id - eta o xi).
template <Scalar R>
R mu(const BilinearForm<R>& eta, const BilinearForm<R>& xi) {
  if (eta.dim_v() != xi.dim_v()) throw DimensionError("eta and xi have different dims");
  const auto id = RingMatrix<R>::identity(static_cast<std::size_t>(eta.dim_v()));
  R a = det(id - composite(xi, eta));
  R b = det(id - composite(eta, xi));
  if (!(a == b)) throw InvariantViolation("det(id - xi eta) != det(id - eta xi)");
  return a;
}

}  // namespace clhopf
