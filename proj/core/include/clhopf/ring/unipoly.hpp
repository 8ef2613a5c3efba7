#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clhopf/ring/matrix.hpp"

namespace clhopf {

// Dense polynomial in Q[x], coefficients stored lowest degree first with no
// trailing zeros (the zero polynomial has no coefficients).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  // From highest degree down, the order used in reports.
  static UniPoly from_descending(const std::vector<Rational>& coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& ascending() const { return c_; }
  std::vector<Rational> descending() const { return {c_.rbegin(), c_.rend()}; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  UniPoly monic() const;
  UniPoly derivative() const;
  Rational operator()(const Rational& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b);  // monic
UniPoly square_free_part(const UniPoly& p);
// Rational roots by the rational root test, without multiplicity.
std::vector<Rational> rational_roots(const UniPoly& p);

RingMatrix<Rational> evaluate_at(const UniPoly& p, const RingMatrix<Rational>& m);
RingMatrix<MultiPoly> evaluate_at(const UniPoly& p, const RingMatrix<MultiPoly>& m);

// Least-degree monic annihilator: the first linear dependency in the Krylov
// stack vec(I), vec(M), vec(M^2), ...
UniPoly min_poly(const RingMatrix<Rational>& m);

}  // namespace clhopf
