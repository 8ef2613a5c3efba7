#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clhopf/ring/scalar.hpp"

namespace clhopf {

template <Scalar R>
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}

  static RingMatrix identity(std::size_t n) {
    RingMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  static RingMatrix from_rows(const std::vector<std::vector<R>>& rows) {
    if (rows.empty()) return {};
    RingMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const R& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
    return (*this)(i, j);
  }

  std::vector<R> column(std::size_t j) const {
    std::vector<R> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  RingMatrix transposed() const {
    RingMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  R trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square matrix");
    R t(0);
    for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  RingMatrix scaled(const R& c) const {
    RingMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * c;
    return out;
  }

  template <class F>
  auto map(F&& f) const {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    RingMatrix<S> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  RingMatrix& operator+=(const RingMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + o.data_[k];
    return *this;
  }
  RingMatrix& operator-=(const RingMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
    return *this;
  }
  friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) { return a += b; }
  friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) { return a -= b; }
  RingMatrix operator-() const { return scaled(R(-1)); }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    RingMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) = out(i, j) + aik * b(k, j);
      }
    return out;
  }

  friend std::vector<R> operator*(const RingMatrix& a, const std::vector<R>& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<R> out(a.rows_, R(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).to_string();
    return out;
  }

 private:
  void check_same_shape(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

template <Scalar R>
RingMatrix<R> kronecker(const RingMatrix<R>& a, const RingMatrix<R>& b) {
  RingMatrix<R> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

inline RingMatrix<MultiPoly> to_polynomial(const RingMatrix<Rational>& m) {
  return m.map([](const Rational& x) { return MultiPoly(x); });
}

inline RingMatrix<Rational> evaluate(const RingMatrix<MultiPoly>& m, const Assignment& at) {
  return m.map([&](const MultiPoly& p) { return p.evaluate(at); });
}

}  // namespace clhopf
