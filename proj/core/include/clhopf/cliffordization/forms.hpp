#pragma once

#include "clhopf/exterior/blade.hpp"
#include "clhopf/ring/linalg.hpp"

namespace clhopf {

// eta pairs vectors of V, xi pairs covectors of V*.
enum class FormRole { Scalar, Coscalar };

const char* to_string(FormRole role);

// entry(i, j) = form(first argument i, second argument j).
template <Scalar R>
class BilinearForm {
 public:
  BilinearForm(FormRole role, RingMatrix<R> entries) : role_(role), m_(std::move(entries)) {
    if (!m_.is_square()) throw DimensionError("bilinear form must be square");
    check_dim(static_cast<int>(m_.rows()));
  }

  static BilinearForm zero(FormRole role, int n) {
    check_dim(n);
    return BilinearForm(role, RingMatrix<R>(n, n));
  }

  int dim_v() const { return static_cast<int>(m_.rows()); }
  FormRole role() const { return role_; }
  const RingMatrix<R>& matrix() const { return m_; }
  const R& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  bool is_zero() const { return m_.is_zero(); }
  bool is_antisymmetric() const { return m_ + m_.transposed() == RingMatrix<R>(m_.rows(), m_.cols()); }
  bool is_symmetric() const { return m_ == m_.transposed(); }

  BilinearForm transposed() const { return BilinearForm(role_, m_.transposed()); }
  BilinearForm with_role(FormRole role) const { return BilinearForm(role, m_); }

 private:
  FormRole role_;
  RingMatrix<R> m_;
};

// Sign multiplying the ascending minor on grade k: (-1)^{k(k-1)/2}. Any other
// choice for k = 2 breaks associativity of the Clifford product.
inline int extended_form_sign(int k) { return ((k * (k - 1) / 2) % 2) != 0 ? -1 : 1; }

// The form extended to all grades, indexed by blade pairs.
template <Scalar R>
class ExtendedForm {
 public:
  ExtendedForm(int n, RingMatrix<R> values) : n_(n), v_(std::move(values)) {}
  int dim_v() const { return n_; }
  const RingMatrix<R>& values() const { return v_; }
  const R& value(Blade a, Blade b) const { return v_(a, b); }

 private:
  int n_;
  RingMatrix<R> v_;
};

template <Scalar R>
ExtendedForm<R> extend_form(const BilinearForm<R>& form) {
  const int n = form.dim_v();
  const std::size_t big = basis_size(n);
  RingMatrix<R> v(big, big);
  for (Blade a = 0; a < big; ++a)
    for (Blade b = 0; b < big; ++b) {
      const int k = grade(a);
      if (k != grade(b)) continue;
      if (k == 0) {
        v(a, b) = R(1);
        continue;
      }
      std::vector<std::size_t> ia, ib;
      for (int i = 0; i < n; ++i) {
        if ((a >> i) & 1u) ia.push_back(static_cast<std::size_t>(i));
        if ((b >> i) & 1u) ib.push_back(static_cast<std::size_t>(i));
      }
      RingMatrix<R> minor(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = form(ia[i], ib[j]);
      const R d = det(minor);
      v(a, b) = extended_form_sign(k) > 0 ? d : -d;
    }
  return ExtendedForm<R>(n, std::move(v));
}

}  // namespace clhopf
