#pragma once

#include <string>
#include <vector>

#include "clhopf/hopf_analysis/families.hpp"
#include "clhopf/ring.hpp"

namespace gen {

using clhopf::MultiPoly;
using clhopf::Rational;
using clhopf::RingMatrix;
using clhopf::SeededRng;

inline RingMatrix<Rational> rational_matrix(SeededRng& rng, std::size_t rows, std::size_t cols, long bound = 9) {
  RingMatrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(bound, 4);
  return m;
}

// Sparse-ish integer matrix, about half the entries zero.
inline RingMatrix<Rational> sparse_matrix(SeededRng& rng, std::size_t rows, std::size_t cols) {
  RingMatrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.integer(0, 1) == 1) m(i, j) = Rational(rng.integer(-4, 4));
  return m;
}

// Small random polynomial in the given variables: up to 3 terms, degree <= 2.
inline MultiPoly poly(SeededRng& rng, const std::vector<std::string>& vars) {
  MultiPoly p(rng.rational(5, 2));
  const long terms = rng.integer(0, 3);
  for (long k = 0; k < terms; ++k) {
    MultiPoly mono(rng.nonzero_rational(5, 2));
    const long deg = rng.integer(1, 2);
    for (long d = 0; d < deg; ++d) mono = mono * MultiPoly::variable(vars[rng.integer(0, vars.size() - 1)]);
    p = p + mono;
  }
  return p;
}

inline RingMatrix<MultiPoly> poly_matrix(SeededRng& rng, std::size_t n, const std::vector<std::string>& vars) {
  RingMatrix<MultiPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = poly(rng, vars);
  return m;
}

inline clhopf::Assignment point(SeededRng& rng, const std::vector<std::string>& vars) {
  clhopf::Assignment at;
  for (const auto& v : vars) at[v] = rng.rational(7, 3);
  return at;
}

}  // namespace gen
