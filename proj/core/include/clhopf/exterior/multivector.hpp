#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clhopf/exterior/blade.hpp"
#include "clhopf/ring/matrix.hpp"

namespace clhopf {

inline std::vector<std::string> coefficient_terms(const Rational& c) { return {c.to_string()}; }
inline std::vector<std::string> coefficient_terms(const MultiPoly& c) { return c.term_strings(); }

namespace detail {

inline void append_scaled_basis(std::vector<std::string>& out, const std::vector<std::string>& coeff,
                                const std::string& basis) {
  for (const auto& term : coeff) {
    if (basis == "1") out.push_back(term);
    else if (term == "1") out.push_back(basis);
    else if (term == "-1") out.push_back("-" + basis);
    else out.push_back(term + "*" + basis);
  }
}

}  // namespace detail

template <Scalar R>
class Multivector {
 public:
  explicit Multivector(int n = 1) : n_(n) { check_dim(n); }

  static Multivector scalar(int n, const R& c) { return basis(n, 0, c); }
  static Multivector basis(int n, Blade b, const R& c = R(1)) {
    Multivector x(n);
    x.add(b, c);
    return x;
  }
  static Multivector from_vector(int n, const std::vector<R>& v) {
    if (v.size() != basis_size(n)) throw DimensionError("coefficient vector has the wrong length");
    Multivector x(n);
    for (Blade b = 0; b < v.size(); ++b) x.add(b, v[b]);
    return x;
  }
  // Column j of a map written in the blade basis.
  static Multivector column(int n, const RingMatrix<R>& m, std::size_t j) {
    return from_vector(n, m.column(j));
  }

  int dim_v() const { return n_; }
  const std::map<Blade, R>& coeffs() const { return c_; }

  R coefficient(Blade b) const {
    auto it = c_.find(b);
    return it == c_.end() ? R(0) : it->second;
  }

  void add(Blade b, const R& c) {
    if (b >= basis_size(n_)) throw DimensionError("blade " + blade_name(b) + " outside dim V");
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(b, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  bool is_zero() const { return c_.empty(); }

  std::vector<R> to_vector() const {
    std::vector<R> v(basis_size(n_), R(0));
    for (const auto& [b, c] : c_) v[b] = c;
    return v;
  }

  Multivector scaled(const R& k) const {
    Multivector out(n_);
    for (const auto& [b, c] : c_) out.add(b, c * k);
    return out;
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, c] : o.c_) add(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, c] : o.c_) add(b, -c);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend bool operator==(const Multivector& a, const Multivector& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

  // Flat rendering, e.g. "1 + 4*t*z + 2*t*e12".
  std::string to_string() const {
    std::vector<std::string> terms;
    for (Blade b : blades_by_grade(n_))
      if (auto it = c_.find(b); it != c_.end())
        detail::append_scaled_basis(terms, coefficient_terms(it->second), blade_name(b));
    return join_signed_terms(terms);
  }

  // (blade name, coefficient rendering) pairs in display order.
  std::vector<std::pair<std::string, std::string>> canonical_terms() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (Blade b : blades_by_grade(n_))
      if (auto it = c_.find(b); it != c_.end()) out.emplace_back(blade_name(b), it->second.to_string());
    return out;
  }

  void check_same(const Multivector& o) const {
    if (o.n_ != n_) throw DimensionError("multivectors over different dim V");
  }

 private:
  int n_;
  std::map<Blade, R> c_;
};

// Element of Cl (x) Cl on the basis e_A (x) e_B; the flat index A*2^n + B is
// used by every map written as a matrix on the tensor square.
template <Scalar R>
class TensorElement {
 public:
  using Key = std::pair<Blade, Blade>;

  explicit TensorElement(int n = 1) : n_(n) { check_dim(n); }

  static TensorElement basis(int n, Blade a, Blade b, const R& c = R(1)) {
    TensorElement t(n);
    t.add(a, b, c);
    return t;
  }
  static TensorElement from_vector(int n, const std::vector<R>& v) {
    const std::size_t big = basis_size(n);
    if (v.size() != big * big) throw DimensionError("tensor coefficient vector has the wrong length");
    TensorElement t(n);
    for (std::size_t k = 0; k < v.size(); ++k) t.add(static_cast<Blade>(k / big), static_cast<Blade>(k % big), v[k]);
    return t;
  }

  int dim_v() const { return n_; }
  const std::map<Key, R>& coeffs() const { return c_; }

  R coefficient(Blade a, Blade b) const {
    auto it = c_.find({a, b});
    return it == c_.end() ? R(0) : it->second;
  }

  void add(Blade a, Blade b, const R& c) {
    if (a >= basis_size(n_) || b >= basis_size(n_)) throw DimensionError("blade outside dim V");
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(Key{a, b}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  bool is_zero() const { return c_.empty(); }

  std::vector<R> to_vector() const {
    const std::size_t big = basis_size(n_);
    std::vector<R> v(big * big, R(0));
    for (const auto& [k, c] : c_) v[k.first * big + k.second] = c;
    return v;
  }

  TensorElement scaled(const R& k) const {
    TensorElement out(n_);
    for (const auto& [key, c] : c_) out.add(key.first, key.second, c * k);
    return out;
  }

  TensorElement& operator+=(const TensorElement& o) {
    check_same(o);
    for (const auto& [k, c] : o.c_) add(k.first, k.second, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    check_same(o);
    for (const auto& [k, c] : o.c_) add(k.first, k.second, -c);
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

  std::string to_string() const {
    std::vector<std::string> terms;
    for (Blade a : blades_by_grade(n_))
      for (Blade b : blades_by_grade(n_))
        if (auto it = c_.find({a, b}); it != c_.end())
          detail::append_scaled_basis(terms, coefficient_terms(it->second),
                                      blade_name(a) + "⊗" + blade_name(b));
    return join_signed_terms(terms);
  }

  void check_same(const TensorElement& o) const {
    if (o.n_ != n_) throw DimensionError("tensors over different dim V");
  }

 private:
  int n_;
  std::map<Key, R> c_;
};

}  // namespace clhopf
