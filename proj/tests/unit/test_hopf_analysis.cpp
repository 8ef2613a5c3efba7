#include "clhopf/hopf_analysis.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace clhopf;

namespace {

const ClaimCheck* find_check(const TheoremReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

ClaimStatus status_of(const TheoremReport& r, const std::string& id) {
  const auto* c = find_check(r, id);
  REQUIRE_MESSAGE(c != nullptr, "missing check " << id);
  return c->status;
}

BilinearForm<Rational> one_by_one(FormRole role, const Rational& x) {
  return BilinearForm<Rational>(role, RingMatrix<Rational>::from_rows({{x}}));
}

}  // namespace

TEST_CASE("claim registry and tallies") {
  CHECK_THROWS_AS(claim_anchor("no.such.claim"), std::logic_error);
  TheoremReport r;
  CHECK_THROWS_AS(r.check("no.such.claim", true, ""), std::logic_error);

  ClaimTally ok("main.i");
  ok.record(true, "a");
  ok.record(true, "b");
  TheoremReport a;
  ok.emit(a, 2);
  CHECK(status_of(a, "main.i") == ClaimStatus::Pass);

  TheoremReport b;
  ok.emit(b, 3);  // fewer passing points than required
  CHECK(status_of(b, "main.i") == ClaimStatus::Fail);

  ClaimTally bad("main.ii");
  bad.record(true, "a");
  bad.record(false, "first");
  bad.record(false, "second");
  TheoremReport c;
  bad.emit(c);
  CHECK(status_of(c, "main.ii") == ClaimStatus::Fail);
  CHECK(find_check(c, "main.ii")->witness.find("first") != std::string::npos);

  TheoremReport d;
  ClaimTally("main.iii").emit(d);
  CHECK(status_of(d, "main.iii") == ClaimStatus::NotApplicable);
  // Not-applicable is not a failure.
  CHECK_FALSE(d.any_failed());
  CHECK(d.all_passed());
}

TEST_CASE("stated polynomial by hand") {
  const Rational tau(7, 2);
  const auto p = stated_polynomial(2, tau);
  const Rational one(1);
  CHECK(p.descending() == std::vector<Rational>{one, -(one + tau), -(one + tau), one});
  // dim V = 1: (x + 1)(x - 1 - tau x)
  CHECK(stated_polynomial(1, Rational(0)) == UniPoly::from_descending({one, Rational(0), Rational(-1)}));
}

TEST_CASE("minimal polynomial claim") {
  // Grassmann: mu S = diag(1, -1, -1, 1), tau = 0, P = (x + 1)(x - 1)^2 collapses to x^2 - 1.
  RingMatrix<Rational> t(4, 4);
  for (Blade b = 0; b < 4; ++b) t(b, b) = Rational(grade(b) % 2 == 0 ? 1 : -1);
  const auto out = minimal_polynomial_claim(t, 2);
  CHECK(out.ok);
  CHECK(out.collapsed);

  // A generic point has no collapse.
  const auto [eta, xi] = parametrized_forms_at(
      {{"r", Rational(1)}, {"s", Rational(2)}, {"t", Rational(1, 3)}, {"u", Rational(1)}, {"v", Rational(1)},
       {"z", Rational(2)}});
  const auto res = solve_antipode(build_context(eta, xi));
  REQUIRE(res.status == AntipodeStatus::Antipodal);
  const auto generic = minimal_polynomial_claim(*res.scaled_antipode, 2);
  CHECK(generic.ok);
  CHECK_FALSE(generic.collapsed);

  // A matrix that is annihilated by nothing of this form.
  const auto bad = minimal_polynomial_claim(RingMatrix<Rational>::identity(4).scaled(Rational(3)), 2);
  CHECK_FALSE(bad.ok);
}

TEST_CASE("main claims on random rational pairs") {
  SeededRng rng(41);
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k < 5; ++k) {
      const auto eta = random_form(rng, n, FormRole::Scalar), xi = random_form(rng, n, FormRole::Coscalar);
      const auto ctx = build_context(eta, xi);
      const auto res = solve_antipode(ctx);
      if (res.status != AntipodeStatus::Antipodal) continue;
      const auto claims = main_claims(ctx, *res.scaled_antipode);
      CHECK(claims.restriction.ok);
      CHECK(claims.determinant.ok);
      CHECK(claims.trace.ok);
      CHECK(claims.annihilates.ok);
      // Trace formula evaluated independently.
      const auto a = eta.matrix(), b = xi.matrix();
      const auto want = (a.transposed() - a) * (b - b.transposed());
      CHECK(claims.trace_value == want.trace() / Rational(2));
      CHECK(res.scaled_antipode->trace() == claims.trace_value);
    }
}

TEST_CASE("main theorem report on the six-parameter family") {
  const auto r = verify_parametrized_family();
  for (const char* id : {"main.i", "main.ii", "main.iii", "main.iv.annihilates", "main.iv.minimal", "family.trace",
                         "family.T1", "family.Te12", "family.det"})
    CHECK_MESSAGE(status_of(r, id) == ClaimStatus::Pass, id);
}

TEST_CASE("2x2 lemma") {
  SeededRng rng(42);
  for (int k = 0; k < 50; ++k) {
    // det A - tr A + 1 = 0 with a = A00 free: (a - 1)(d - 1) = bc.
    const Rational a = rng.rational(), b = rng.nonzero_rational(), c = rng.nonzero_rational();
    if (a == Rational(1)) continue;
    const Rational d = Rational(1) + b * c / (a - Rational(1));
    const auto m = RingMatrix<Rational>::from_rows({{a, b}, {c, d}});
    CHECK(oracle::cofactor_det(m) - m.trace() + Rational(1) == Rational(0));
    CHECK(lemma_product(m).is_zero());
  }
  CHECK_FALSE(lemma_product(RingMatrix<Rational>::from_rows({{2, 0}, {0, 3}})).is_zero());
}

TEST_CASE("antipode-less case representatives") {
  for (auto c : {AntipodeLessCase::I, AntipodeLessCase::II, AntipodeLessCase::III}) {
    const auto [eta, xi] = case_representative(c);
    CHECK(satisfies_case(c, eta, xi));
  }
  const auto [e1, x1] = case_representative(AntipodeLessCase::I);
  CHECK(mu(e1, x1).is_zero());
  const auto [e3, x3] = case_representative(AntipodeLessCase::III);
  CHECK(mu(e3, x3).is_zero());
  // The literal case II constraints force mu = 2.
  const auto [e2, x2] = case_representative(AntipodeLessCase::II);
  CHECK(mu(e2, x2) == Rational(2));
  CHECK(to_string(AntipodeLessCase::II) == std::string("caseII"));
}

TEST_CASE("xi = eta^{-1} is antipode-less") {
  SeededRng rng(43);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k < 3; ++k) {
      const auto g = random_invertible(rng, n);
      const BilinearForm<Rational> eta(FormRole::Scalar, g), xi(FormRole::Coscalar, inverse(g));
      CHECK(mu(eta, xi).is_zero());
      CHECK(solve_antipode(build_context(eta, xi)).status == AntipodeStatus::AntipodeLess);
    }
}

TEST_CASE("crossing of the Grassmann biconvolution is the graded switch") {
  for (int n = 1; n <= 2; ++n) {
    const auto [eta, xi] = zero_forms<Rational>(n);
    const auto cm = build_crossing(build_context(eta, xi));
    CHECK(cm.sigma == graded_switch_matrix<Rational>(n));
    CHECK(cm.solution_dimension == 0);
    CHECK(cm.formula_agrees);
  }
}

TEST_CASE("crossing at dim V = 1 in closed form") {
  for (long m : {3L, -5L, 7L}) {
    const Rational mu_value(m);
    const auto ctx = build_context(one_by_one(FormRole::Scalar, Rational(1)),
                                   one_by_one(FormRole::Coscalar, Rational(1) - mu_value));
    const auto cm = build_crossing(ctx);
    const Rational f = Rational(1) - Rational(2) / mu_value;
    CHECK(oracle::cofactor_det(cm.sigma) == f * f);
    CHECK(cm.sigma.trace() == Rational(1) - mu_value);
    CHECK(cm.residuals.factorization == 0);
    CHECK(cm.residuals.multiplicative == 0);
    CHECK(cm.residuals.comultiplicative == 0);
    CHECK(cm.formula_agrees);
    CHECK(crossing_degree(cm.sigma).distinct == 4);
  }
  for (long m : {1L, 2L, 4L}) {
    const auto ctx = build_context(one_by_one(FormRole::Scalar, Rational(1)),
                                   one_by_one(FormRole::Coscalar, Rational(1) - Rational(m)));
    CHECK(crossing_degree(build_crossing(ctx).sigma).distinct == 2);
  }
  // The antipode-less case leaves a family of crossings.
  const auto degenerate = build_context(one_by_one(FormRole::Scalar, Rational(1)), one_by_one(FormRole::Coscalar, Rational(1)));
  CHECK(crossing_solution_dimension(degenerate) == std::optional<std::size_t>(12));
  CHECK_THROWS(build_crossing(degenerate));
}

TEST_CASE("crossed product with the graded switch is the switch-twisted product") {
  const auto [eta, xi] = zero_forms<Rational>(2);
  const auto ctx = build_context(eta, xi);
  const auto sw = graded_switch_matrix<Rational>(2);
  for (Blade a = 0; a < 4; ++a)
    for (Blade b = 0; b < 4; ++b)
      for (Blade c = 0; c < 4; ++c)
        for (Blade d = 0; d < 4; ++d) {
          const auto x = TensorElement<Rational>::basis(2, a, b), y = TensorElement<Rational>::basis(2, c, d);
          REQUIRE(crossed_product(ctx, sw, x, y) == switch_twisted_product(x, y));
        }
}

TEST_CASE("polynomial p and the cubic") {
  CHECK(theorem_p().ascending() == theorem_p_expected());
  CHECK(theorem_p().degree() == 12);
  CHECK(rational_roots(theorem_p()).empty());
  CHECK(rational_roots(n1_degree3_cubic()).empty());
  CHECK(n1_degree3_cubic()(Rational(2)) == Rational(-8));
}

TEST_CASE("splitting at eta = xi = 0") {
  const auto [eta, xi] = zero_forms<Rational>(2);
  const auto ctx = build_context(eta, xi);
  CHECK(splitting_element(ctx) == TensorElement<Rational>::basis(2, 0, 0));
  const auto out = splitting_check(eta, xi);
  RingMatrix<Rational> want(4, 4);
  for (Blade b = 0; b < 4; ++b) want(b, b) = Rational(1 << grade(b));
  CHECK(out.composite == want);
  CHECK_FALSE(out.split);
  CHECK(out.condition);
}

TEST_CASE("splitting composite on the antisymmetric family") {
  SeededRng rng(44);
  for (int k = 0; k < 10; ++k) {
    const Rational t = rng.nonzero_rational(), z = rng.nonzero_rational();
    const auto [eta, xi] = antisymmetric_forms(t, z);
    const auto out = splitting_check(eta, xi, false);
    const Rational w = t * z, one(1);
    // Restricted to V it is 2(1 + w) id.
    CHECK(out.composite(1, 1) == Rational(2) * (one + w));
    CHECK(out.composite(2, 2) == Rational(2) * (one + w));
    CHECK(out.composite(0, 0) == (one + w) * (one + w));
    CHECK(out.composite(3, 3) == Rational(4) * (one + w));
  }
}

TEST_CASE("GL action") {
  const auto g = RingMatrix<Rational>::from_rows({{2, 1}, {1, 1}});
  const auto eta = rational_form(FormRole::Scalar, {{1, 2}, {3, 4}});
  const auto xi = rational_form(FormRole::Coscalar, {{0, 1}, {-1, 0}});
  const auto [e2, x2] = gl_transform(g, eta, xi);
  CHECK(e2.matrix() == g.transposed() * eta.matrix() * g);
  CHECK(x2.matrix() == g * xi.matrix() * g.transposed());
  CHECK_THROWS_AS(gl_transform(RingMatrix<Rational>::from_rows({{1, 2}, {2, 4}}), eta, xi), SingularTransform);

  const Rational r(3), s(-2);
  const auto a = RingMatrix<Rational>::from_rows({{r * r, r * s}, {-(r * s), -(s * s)}});
  const auto b = RingMatrix<Rational>::from_rows({{r * r, Rational(2) * r * r * s}, {0, 0}});
  const auto found = rank_one_congruence(a, b);
  REQUIRE(found.has_value());
  CHECK(found->transposed() * a * *found == b);
  CHECK_FALSE(det(*found).is_zero());
  CHECK_FALSE(rank_one_congruence(a, RingMatrix<Rational>::identity(2)).has_value());
}

TEST_CASE("structure reports pass at a random context") {
  SeededRng rng(45);
  const auto eta = random_form(rng, 2, FormRole::Scalar), xi = random_form(rng, 2, FormRole::Coscalar);
  CHECK(tables_report(eta, xi).all_passed());
  const auto ar = antipode_report(eta, xi);
  CHECK_FALSE(ar.any_failed());
  CHECK(status_of(ar, "antipode.axioms") == ClaimStatus::Pass);
  CHECK(verify_main_theorem(eta, xi).all_passed());
}
