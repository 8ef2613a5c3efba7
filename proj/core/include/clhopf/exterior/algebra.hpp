#pragma once

#include <vector>

#include "clhopf/exterior/multivector.hpp"

namespace clhopf {

// Matrix layouts shared by every structure map:
//   product    m : Cl (x) Cl -> Cl   is N x N^2, column A*N+B holds e_A . e_B
//   coproduct  D : Cl -> Cl (x) Cl   is N^2 x N, column A holds D(e_A)
//   endomorphism of Cl               is N x N,   column A holds F(e_A)
// with N = 2^n.
inline std::size_t pair_index(int n, Blade a, Blade b) { return a * basis_size(n) + b; }

// Deconcatenation terms of the Grassmann coproduct of a single blade:
// e_A -> sum over B subset of A of sign(B, A\B) e_B (x) e_{A\B}.
struct Split {
  Blade left;
  Blade right;
  int sign;
};
std::vector<Split> grassmann_splits(Blade a);

template <Scalar R>
Multivector<R> wedge(const Multivector<R>& x, const Multivector<R>& y) {
  x.check_same(y);
  Multivector<R> out(x.dim_v());
  for (const auto& [a, ca] : x.coeffs())
    for (const auto& [b, cb] : y.coeffs())
      if (const int s = wedge_sign(a, b); s != 0) out.add(a | b, s > 0 ? ca * cb : -(ca * cb));
  return out;
}

template <Scalar R>
TensorElement<R> grassmann_coproduct(const Multivector<R>& x) {
  TensorElement<R> out(x.dim_v());
  for (const auto& [a, c] : x.coeffs())
    for (const auto& s : grassmann_splits(a)) out.add(s.left, s.right, s.sign > 0 ? c : -c);
  return out;
}

template <Scalar R>
TensorElement<R> graded_switch(const TensorElement<R>& t) {
  TensorElement<R> out(t.dim_v());
  for (const auto& [k, c] : t.coeffs()) {
    const bool odd = (grade(k.first) * grade(k.second)) % 2 != 0;
    out.add(k.second, k.first, odd ? -c : c);
  }
  return out;
}

template <Scalar R>
Multivector<R> grade_project(const Multivector<R>& x, int k) {
  if (k < 0 || k > x.dim_v()) throw DimensionError("grade out of range");
  Multivector<R> out(x.dim_v());
  for (const auto& [b, c] : x.coeffs())
    if (grade(b) == k) out.add(b, c);
  return out;
}

// Product in the graded-switch twisted tensor algebra:
// (a (x) b)(c (x) d) = (-1)^{|b||c|} (a ^ c) (x) (b ^ d).
template <Scalar R>
TensorElement<R> switch_twisted_product(const TensorElement<R>& x, const TensorElement<R>& y) {
  x.check_same(y);
  TensorElement<R> out(x.dim_v());
  for (const auto& [k1, c1] : x.coeffs())
    for (const auto& [k2, c2] : y.coeffs()) {
      const int s1 = wedge_sign(k1.first, k2.first);
      const int s2 = wedge_sign(k1.second, k2.second);
      if (s1 == 0 || s2 == 0) continue;
      int s = s1 * s2;
      if ((grade(k1.second) * grade(k2.first)) % 2 != 0) s = -s;
      out.add(k1.first | k2.first, k1.second | k2.second, s > 0 ? c1 * c2 : -(c1 * c2));
    }
  return out;
}

// Transpose in the blade basis and its dual basis.
template <Scalar R>
RingMatrix<R> duality_transpose(const RingMatrix<R>& f) {
  return f.transposed();
}

template <Scalar R>
RingMatrix<R> wedge_matrix(int n) {
  check_dim(n);
  const std::size_t big = basis_size(n);
  RingMatrix<R> m(big, big * big);
  for (Blade a = 0; a < big; ++a)
    for (Blade b = 0; b < big; ++b)
      if (const int s = wedge_sign(a, b); s != 0) m(a | b, pair_index(n, a, b)) = R(s);
  return m;
}

template <Scalar R>
RingMatrix<R> grassmann_coproduct_matrix(int n) {
  check_dim(n);
  const std::size_t big = basis_size(n);
  RingMatrix<R> m(big * big, big);
  for (Blade a = 0; a < big; ++a)
    for (const auto& s : grassmann_splits(a)) m(pair_index(n, s.left, s.right), a) = R(s.sign);
  return m;
}

template <Scalar R>
RingMatrix<R> graded_switch_matrix(int n) {
  check_dim(n);
  const std::size_t big = basis_size(n);
  RingMatrix<R> m(big * big, big * big);
  for (Blade a = 0; a < big; ++a)
    for (Blade b = 0; b < big; ++b)
      m(pair_index(n, b, a), pair_index(n, a, b)) = R((grade(a) * grade(b)) % 2 != 0 ? -1 : 1);
  return m;
}

// x . y through a product matrix.
template <Scalar R>
Multivector<R> multiply(const RingMatrix<R>& product, const Multivector<R>& x, const Multivector<R>& y) {
  x.check_same(y);
  const int n = x.dim_v();
  Multivector<R> out(n);
  for (const auto& [a, ca] : x.coeffs())
    for (const auto& [b, cb] : y.coeffs()) {
      const std::size_t col = pair_index(n, a, b);
      const R k = ca * cb;
      for (Blade c = 0; c < product.rows(); ++c)
        if (!product(c, col).is_zero()) out.add(c, product(c, col) * k);
    }
  return out;
}

template <Scalar R>
TensorElement<R> comultiply(const RingMatrix<R>& coproduct, const Multivector<R>& x) {
  const int n = x.dim_v();
  const std::size_t big = basis_size(n);
  TensorElement<R> out(n);
  for (const auto& [a, ca] : x.coeffs())
    for (std::size_t row = 0; row < coproduct.rows(); ++row)
      if (!coproduct(row, a).is_zero())
        out.add(static_cast<Blade>(row / big), static_cast<Blade>(row % big), coproduct(row, a) * ca);
  return out;
}

template <Scalar R>
Multivector<R> apply(const RingMatrix<R>& f, const Multivector<R>& x) {
  return Multivector<R>::from_vector(x.dim_v(), f * x.to_vector());
}

}  // namespace clhopf
