#include "clhopf/hopf_analysis/families.hpp"

namespace clhopf {

long SeededRng::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(gen_() % span);
}

Rational SeededRng::rational(long num_bound, long den_bound) {
  const long num = integer(-num_bound, num_bound);
  const long den = integer(1, den_bound);
  return Rational(num, den);
}

Rational SeededRng::nonzero_rational(long num_bound, long den_bound) {
  for (;;) {
    Rational q = rational(num_bound, den_bound);
    if (!q.is_zero()) return q;
  }
}

FormPair<MultiPoly> parametrized_forms() {
  auto var = [](const char* name) { return MultiPoly::variable(name); };
  const auto r = var("r"), s = var("s"), t = var("t"), u = var("u"), v = var("v"), z = var("z");
  return {BilinearForm<MultiPoly>(FormRole::Scalar, RingMatrix<MultiPoly>::from_rows({{r * r, t}, {-t, -(s * s)}})),
          BilinearForm<MultiPoly>(FormRole::Coscalar, RingMatrix<MultiPoly>::from_rows({{u * u, z}, {-z, -(v * v)}}))};
}

FormPair<Rational> parametrized_forms_at(const Assignment& at) {
  const auto [eta, xi] = parametrized_forms();
  return {BilinearForm<Rational>(FormRole::Scalar, evaluate(eta.matrix(), at)),
          BilinearForm<Rational>(FormRole::Coscalar, evaluate(xi.matrix(), at))};
}

FormPair<Rational> antisymmetric_forms(const Rational& t, const Rational& z) {
  return {BilinearForm<Rational>(FormRole::Scalar, RingMatrix<Rational>::from_rows({{Rational(0), t}, {-t, Rational(0)}})),
          BilinearForm<Rational>(FormRole::Coscalar, RingMatrix<Rational>::from_rows({{Rational(0), z}, {-z, Rational(0)}}))};
}

BilinearForm<Rational> random_form(SeededRng& rng, int n, FormRole role) {
  RingMatrix<Rational> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.rational();
  return BilinearForm<Rational>(role, std::move(m));
}

RingMatrix<Rational> random_invertible(SeededRng& rng, int n) {
  for (;;) {
    RingMatrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.rational(5, 3);
    if (!det(m).is_zero()) return m;
  }
}

RingMatrix<Rational> inverse(const RingMatrix<Rational>& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RingMatrix<Rational> out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = Rational(1);
    const auto res = solve_linear(m, e);
    if (res.status != SolveStatus::Unique) throw DivisionByZero();
    for (std::size_t i = 0; i < n; ++i) out(i, j) = res.solution[i] / res.denominator;
  }
  return out;
}

}  // namespace clhopf
