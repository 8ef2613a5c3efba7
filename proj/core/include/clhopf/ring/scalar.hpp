#pragma once

#include <concepts>
#include <string>

#include "clhopf/ring/errors.hpp"
#include "clhopf/ring/multipoly.hpp"
#include "clhopf/ring/rational.hpp"

namespace clhopf {

template <class R>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_field = true;
  static constexpr const char* name = "rational";
};

template <>
struct ScalarTraits<MultiPoly> {
  static constexpr bool is_field = false;
  static constexpr const char* name = "polynomial";
};

template <class R>
concept Scalar = std::constructible_from<R, long> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { ScalarTraits<R>::is_field } -> std::convertible_to<bool>;
};

template <class R>
concept FieldScalar = Scalar<R> && ScalarTraits<R>::is_field;

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InexactDivision("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  return *std::move(q);
}

// Cheap size proxy used to pick pivots that keep polynomial growth down.
inline std::size_t scalar_weight(const Rational& a) {
  return mpz_sizeinbase(a.value().get_num_mpz_t(), 2) + mpz_sizeinbase(a.value().get_den_mpz_t(), 2);
}
inline std::size_t scalar_weight(const MultiPoly& a) { return a.term_count(); }

}  // namespace clhopf
