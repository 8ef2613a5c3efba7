#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "clhopf/cliffordization/forms.hpp"

namespace clhopf {

inline constexpr std::uint64_t kDefaultSeed = 20011;

// Portable seeded generator: mt19937_64 output reduced by modulo, so sweeps
// give the same points with every standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}
  // Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi);
  // num/den with |num| <= num_bound, 1 <= den <= den_bound.
  Rational rational(long num_bound = 9, long den_bound = 4);
  Rational nonzero_rational(long num_bound = 9, long den_bound = 4);

 private:
  std::mt19937_64 gen_;
};

template <Scalar R>
using FormPair = std::pair<BilinearForm<R>, BilinearForm<R>>;

// eta = [[r^2, t], [-t, -s^2]], xi = [[u^2, z], [-z, -v^2]] over Q[r, s, t, u, v, z].
FormPair<MultiPoly> parametrized_forms();

// The same family at a rational point.
FormPair<Rational> parametrized_forms_at(const Assignment& at);

// eta = [[0, t], [-t, 0]], xi = [[0, z], [-z, 0]].
FormPair<Rational> antisymmetric_forms(const Rational& t, const Rational& z);

BilinearForm<Rational> random_form(SeededRng& rng, int n, FormRole role);
RingMatrix<Rational> random_invertible(SeededRng& rng, int n);

RingMatrix<Rational> inverse(const RingMatrix<Rational>& m);

template <Scalar R>
FormPair<R> zero_forms(int n) {
  return {BilinearForm<R>::zero(FormRole::Scalar, n), BilinearForm<R>::zero(FormRole::Coscalar, n)};
}

inline BilinearForm<Rational> rational_form(FormRole role, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& row : rows) q.emplace_back(row.begin(), row.end());
  return BilinearForm<Rational>(role, RingMatrix<Rational>::from_rows(q));
}

}  // namespace clhopf
