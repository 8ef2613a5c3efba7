#include "clhopf/convolution.hpp"
#include "clhopf/hopf_analysis/antipodeless.hpp"
#include "clhopf/hopf_analysis/families.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace clhopf;

namespace {

// f * g = m o (f (x) g) o Delta as a plain matrix product.
template <class R>
RingMatrix<R> convolve_by_matrices(const RingMatrix<R>& f, const RingMatrix<R>& g, const BiconvolutionContext<R>& ctx) {
  return ctx.product_matrix() * kronecker(f, g) * ctx.coproduct_matrix();
}

RingMatrix<Rational> diagonal(const std::vector<Rational>& d) {
  RingMatrix<Rational> m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// Sign of a blade under x -> -x on V.
RingMatrix<Rational> grade_involution(int n) {
  std::vector<Rational> d;
  for (Blade b = 0; b < basis_size(n); ++b) d.emplace_back(grade(b) % 2 == 0 ? 1 : -1);
  return diagonal(d);
}

}  // namespace

TEST_CASE("convolution matches the matrix formula") {
  SeededRng rng(31);
  for (int n = 1; n <= 3; ++n) {
    const auto ctx = build_context(random_form(rng, n, FormRole::Scalar), random_form(rng, n, FormRole::Coscalar));
    const auto big = ctx.size();
    const auto f = gen::rational_matrix(rng, big, big, 3), g = gen::rational_matrix(rng, big, big, 3);
    CHECK(convolve(f, g, ctx) == convolve_by_matrices(f, g, ctx));
  }
}

TEST_CASE("convolution unit is u o epsilon and a two-sided identity") {
  SeededRng rng(32);
  for (int n = 1; n <= 3; ++n) {
    const auto ctx = build_context(random_form(rng, n, FormRole::Scalar), random_form(rng, n, FormRole::Coscalar));
    const auto u = convolution_unit(ctx);
    RingMatrix<Rational> want(ctx.size(), ctx.size());
    want(0, 0) = Rational(1);
    CHECK(u == want);
    const auto f = gen::rational_matrix(rng, ctx.size(), ctx.size(), 3);
    CHECK(convolve(f, u, ctx) == f);
    CHECK(convolve(u, f, ctx) == f);
  }
}

TEST_CASE("convolution is associative") {
  SeededRng rng(33);
  const auto ctx = build_context(random_form(rng, 2, FormRole::Scalar), random_form(rng, 2, FormRole::Coscalar));
  const auto f = gen::rational_matrix(rng, 4, 4, 3), g = gen::rational_matrix(rng, 4, 4, 3),
             h = gen::rational_matrix(rng, 4, 4, 3);
  CHECK(convolve(convolve(f, g, ctx), h, ctx) == convolve(f, convolve(g, h, ctx), ctx));
}

TEST_CASE("Grassmann antipode is the grade involution") {
  for (int n = 1; n <= 4; ++n) {
    const auto [eta, xi] = zero_forms<Rational>(n);
    const auto res = solve_antipode(build_context(eta, xi));
    REQUIRE(res.status == AntipodeStatus::Antipodal);
    CHECK(*res.antipode == grade_involution(n));
  }
  const auto [eta, xi] = zero_forms<Rational>(2);
  CHECK(*solve_antipode(build_context(eta, xi)).antipode == diagonal({1, -1, -1, 1}));
}

TEST_CASE("dim V = 1 antipode in closed form") {
  // With eta = [[a]], xi = [[b]] the axioms reduce by hand to S = diag(1, -1) / (1 - ab).
  SeededRng rng(34);
  for (int k = 0; k < 30; ++k) {
    const Rational a = rng.rational(), b = rng.rational();
    const BilinearForm<Rational> eta(FormRole::Scalar, RingMatrix<Rational>::from_rows({{a}}));
    const BilinearForm<Rational> xi(FormRole::Coscalar, RingMatrix<Rational>::from_rows({{b}}));
    const Rational m = Rational(1) - a * b;
    const auto res = solve_antipode(build_context(eta, xi));
    CHECK(res.mu == m);
    if (m.is_zero()) {
      CHECK(res.status == AntipodeStatus::AntipodeLess);
      continue;
    }
    REQUIRE(res.status == AntipodeStatus::Antipodal);
    CHECK(*res.antipode == diagonal({m.inverse(), -m.inverse()}));
    CHECK(*res.scaled_antipode == diagonal({1, -1}));
  }
  const BilinearForm<Rational> eta(FormRole::Scalar, RingMatrix<Rational>::from_rows({{Rational(2)}}));
  const BilinearForm<Rational> xi(FormRole::Coscalar, RingMatrix<Rational>::from_rows({{Rational(1, 2)}}));
  CHECK(solve_antipode(build_context(eta, xi)).status == AntipodeStatus::AntipodeLess);
}

TEST_CASE("antipode satisfies both axioms and the dual side") {
  SeededRng rng(35);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k < 3; ++k) {
      const auto ctx = build_context(random_form(rng, n, FormRole::Scalar), random_form(rng, n, FormRole::Coscalar));
      const auto res = solve_antipode(ctx);
      CHECK((res.status == AntipodeStatus::Antipodal) == !ctx.mu().is_zero());
      if (res.status != AntipodeStatus::Antipodal) continue;
      const auto id = RingMatrix<Rational>::identity(ctx.size());
      const auto u = convolution_unit(ctx);
      CHECK(convolve_by_matrices(id, *res.antipode, ctx) == u);
      CHECK(convolve_by_matrices(*res.antipode, id, ctx) == u);
      CHECK(*res.scaled_antipode == res.antipode->scaled(ctx.mu()));
      const auto dual = coconvolution(ctx);
      const auto sc = coantipode(*res.antipode);
      CHECK(convolve_by_matrices(id, sc, dual) == convolution_unit(dual));
      CHECK(convolve_by_matrices(sc, id, dual) == convolution_unit(dual));
    }
}

TEST_CASE("certificate for an antipode-less context") {
  const auto [eta, xi] = case_representative(AntipodeLessCase::I);
  const auto res = solve_antipode(build_context(eta, xi));
  CHECK(res.status == AntipodeStatus::AntipodeLess);
  CHECK(res.mu.is_zero());
  CHECK_FALSE(res.antipode.has_value());
  CHECK(res.certificate.augmented_rank == res.certificate.rank + 1);
  CHECK(res.certificate.rank < res.certificate.unknowns);
  CHECK(res.certificate.inconsistent_equation.has_value());
}

TEST_CASE("direct mu S on the six-parameter family") {
  const auto [eta, xi] = parametrized_forms();
  const auto ctx = build_context(eta, xi);
  const auto res = solve_antipode(ctx);
  REQUIRE(res.status == AntipodeStatus::Antipodal);
  const auto& t = *res.scaled_antipode;
  const auto tv = MultiPoly::variable("t"), zv = MultiPoly::variable("z");
  const auto img = [&](Blade a) { return Multivector<MultiPoly>::column(2, t, a); };

  auto t1 = Multivector<MultiPoly>::scalar(2, MultiPoly(1) + (tv * zv).scaled(4));
  t1.add(0b11, zv.scaled(2));
  CHECK(img(0) == t1);
  auto t12 = Multivector<MultiPoly>::scalar(2, tv.scaled(2));
  t12.add(0b11, MultiPoly(1));
  CHECK(img(0b11) == t12);
  CHECK(img(0b01) == Multivector<MultiPoly>::basis(2, 0b01, MultiPoly(-1)));
  CHECK(img(0b10) == Multivector<MultiPoly>::basis(2, 0b10, MultiPoly(-1)));

  // The coantipode carries the transposed values.
  const auto tc = coantipode(t);
  auto c1 = Multivector<MultiPoly>::scalar(2, MultiPoly(1) + (tv * zv).scaled(4));
  c1.add(0b11, tv.scaled(2));
  CHECK(Multivector<MultiPoly>::column(2, tc, 0) == c1);
  CHECK(res.mu == oracle::cofactor_det(RingMatrix<MultiPoly>::identity(2) - xi.matrix() * eta.matrix()));

  // Specializing the polynomial solve agrees with the rational solve.
  SeededRng rng(36);
  for (int k = 0; k < 5; ++k) {
    const auto at = gen::point(rng, {"r", "s", "t", "u", "v", "z"});
    const auto [qeta, qxi] = parametrized_forms_at(at);
    const auto q = solve_antipode(build_context(qeta, qxi));
    if (q.status != AntipodeStatus::Antipodal) continue;
    CHECK(evaluate(t, at) == *q.scaled_antipode);
  }
}

TEST_CASE("weak antipodes") {
  const auto diag = rational_form(FormRole::Scalar, {{1, 0}, {0, -1}});
  const auto w = weak_antipode(build_context(diag, diag.with_role(FormRole::Coscalar)));
  REQUIRE(w.affine_dimension.has_value());
  CHECK(*w.affine_dimension == 15);
  for (const auto& s : w.solutions) {
    const auto ctx = build_context(diag, diag.with_role(FormRole::Coscalar));
    const auto id = RingMatrix<Rational>::identity(4);
    CHECK(convolve(convolve(id, s, ctx), id, ctx) == id);
    CHECK(convolve(convolve(s, id, ctx), s, ctx) == s);
  }
  const auto [eta3, xi3] = case_representative(AntipodeLessCase::III);
  CHECK_FALSE(weak_antipode(build_context(eta3, xi3)).affine_dimension.has_value());
  const auto [eta, xi] = zero_forms<Rational>(1);
  const auto antipodal = weak_antipode(build_context(eta, xi));
  REQUIRE(antipodal.affine_dimension.has_value());
  CHECK(*antipodal.affine_dimension == 0);
}
