#include "clhopf/hopf_analysis/antipodeless.hpp"

#include "clhopf/hopf_analysis/structure.hpp"

namespace clhopf {

const char* to_string(AntipodeLessCase c) {
  switch (c) {
    case AntipodeLessCase::I: return "caseI";
    case AntipodeLessCase::II: return "caseII";
    case AntipodeLessCase::III: return "caseIII";
  }
  return "?";
}

FormPair<Rational> case_representative(AntipodeLessCase c) {
  switch (c) {
    case AntipodeLessCase::I:
      return {rational_form(FormRole::Scalar, {{1, 0}, {0, -1}}), rational_form(FormRole::Coscalar, {{1, 0}, {0, 5}})};
    case AntipodeLessCase::II:
      return {rational_form(FormRole::Scalar, {{0, 1}, {-1, -1}}),
              rational_form(FormRole::Coscalar, {{6, 2}, {-2, -1}})};
    case AntipodeLessCase::III:
      return {rational_form(FormRole::Scalar, {{3, 1}, {-1, 0}}), rational_form(FormRole::Coscalar, {{0, -1}, {1, 0}})};
  }
  throw std::invalid_argument("unknown case");
}

bool satisfies_case(AntipodeLessCase c, const BilinearForm<Rational>& eta, const BilinearForm<Rational>& xi) {
  const auto& e = eta.matrix();
  const auto& x = xi.matrix();
  const auto a = composite(xi, eta);
  const Rational t = e(0, 1), z = x(0, 1);
  switch (c) {
    case AntipodeLessCase::I:
      return eta.is_symmetric() && xi.is_symmetric() && det(composite(eta, xi)) + Rational(1) == a.trace();
    case AntipodeLessCase::II:
      // eta = [[r^2, t], [-t, -s^2]], xi = [[u^2, z], [-z, -v^2]]
      return e(1, 0) == -t && x(1, 0) == -z && e(0, 0).is_zero() && (a.trace() + Rational(1) + t * z).is_zero() &&
             (z + t * det(x)).is_zero();
    case AntipodeLessCase::III:
      return e(1, 0) == -t && x(1, 0) == -z && x(1, 1).is_zero() && t * z == Rational(-1) &&
             x(0, 0) == e(1, 1) * z * z;
  }
  return false;
}

RingMatrix<Rational> lemma_product(const RingMatrix<Rational>& a) {
  const auto id = RingMatrix<Rational>::identity(2);
  return (id - a) * (id + a - id.scaled(a.trace()));
}

namespace {

bool lemma_constraint(const RingMatrix<Rational>& a) { return (det(a) - a.trace() + Rational(1)).is_zero(); }

// im(B) in ker(C): every column of B is a combination of a kernel basis of C.
bool image_in_kernel(const RingMatrix<Rational>& b, const RingMatrix<Rational>& c) {
  const auto k = kernel_basis(c);
  const std::size_t kr = rank(k);
  RingMatrix<Rational> joined(b.rows(), k.cols() + b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < k.cols(); ++j) joined(i, j) = k(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) joined(i, k.cols() + j) = b(i, j);
  }
  return rank(joined) == kr;
}

std::string weak_text(const WeakAntipodeResult& w) {
  if (!w.affine_dimension) return "id*S*id = id has no solution";
  std::string out = "id*S*id = id: affine dimension " + std::to_string(*w.affine_dimension) + "; ";
  out += std::to_string(w.solutions.size()) + " of " + std::to_string(w.candidates_tested) + " candidates satisfy S*id*S = S";
  if (w.whole_line) out += " (whole line)";
  out += w.exhaustive ? ", exhaustive" : ", sampled";
  return out;
}

}  // namespace

TheoremReport antipodeless_suite(std::uint64_t seed, std::size_t lemma_count, std::size_t inverse_count) {
  TheoremReport report;
  report.theorem = "antipodeless";
  report.context.ring = "rational";
  report.context.dim = 2;
  report.context.family = "cases I-III, xi = eta^{-1}, constrained 2x2 matrices";
  report.context.seed = seed;
  SeededRng rng(seed);

  for (auto c : {AntipodeLessCase::I, AntipodeLessCase::II, AntipodeLessCase::III}) {
    const std::string tag = to_string(c);
    const auto [eta, xi] = case_representative(c);
    const std::string where = "eta=" + matrix_text(eta.matrix().to_strings()) + " xi=" + matrix_text(xi.matrix().to_strings());
    report.check(tag + ".constraint", satisfies_case(c, eta, xi), where);
    const auto ctx = build_context(eta, xi);
    report.check(tag + ".mu", ctx.mu().is_zero(), "mu = " + ctx.mu().to_string());
    try {
      const auto res = solve_antipode(ctx);
      const bool less = res.status == AntipodeStatus::AntipodeLess;
      report.check(tag + ".antipodeless", less && res.certificate.rank < res.certificate.augmented_rank,
                   std::string(to_string(res.status)) + ": " + certificate_text(res.certificate));
      if (less) report.observe(tag + ".weak-antipode", weak_text(weak_antipode(ctx)));
    } catch (const MainTheoremViolation& e) {
      report.check(tag + ".antipodeless", false, e.what());
    }
  }
  {
    // r = 0 and z = -t det xi with tr(xi o eta) = 1 - tz in place of -1 - tz.
    const auto eta = rational_form(FormRole::Scalar, {{0, 1}, {-1, -1}});
    const auto xi = rational_form(FormRole::Coscalar, {{1, 1}, {-1, -2}});
    const auto res = solve_antipode(build_context(eta, xi));
    report.observe("caseII.variant", "eta=[[0, 1], [-1, -1]] xi=[[1, 1], [-1, -2]] (tr(xi o eta) = 1 - tz): mu = " +
                                         res.mu.to_string() + ", " + to_string(res.status));
  }

  // xi = eta^{-1}
  ClaimTally inv_mu("inverse.mu"), inv_less("inverse.antipodeless"), inv_dim("inverse.dimcl");
  std::size_t formula_hits = 0, symmetric_total = 0, symmetric_hits = 0, tested = 0;
  std::string formula_miss;
  for (std::size_t k = 0; k <= inverse_count; ++k) {
    const BilinearForm<Rational> eta(FormRole::Scalar, k == 0 ? rational_form(FormRole::Scalar, {{1, 0}, {0, -1}}).matrix()
                                                                : random_invertible(rng, 2));
    const BilinearForm<Rational> xi(FormRole::Coscalar, inverse(eta.matrix()));
    const std::string where = "eta=" + matrix_text(eta.matrix().to_strings());
    const auto ctx = build_context(eta, xi);
    inv_mu.record(ctx.mu().is_zero(), where + " mu=" + ctx.mu().to_string());
    try {
      const auto res = solve_antipode(ctx);
      inv_less.record(res.status == AntipodeStatus::AntipodeLess, where + ": " + certificate_text(res.certificate));
    } catch (const MainTheoremViolation& e) {
      inv_less.record(false, where + ": " + e.what());
    }
    const auto comp = ctx.product_matrix() * ctx.coproduct_matrix();
    const auto id = RingMatrix<Rational>::identity(ctx.size());
    const bool four = comp == id.scaled(Rational(4));
    inv_dim.record(four, where + ": wedge o Delta = " + matrix_text(comp.to_strings()));
    const Rational factor = det(eta.matrix() + eta.matrix().transposed()) / det(eta.matrix());
    ++tested;
    if (comp == id.scaled(factor))
      ++formula_hits;
    else if (formula_miss.empty())
      formula_miss = where;
    if (eta.is_symmetric()) {
      ++symmetric_total;
      if (four) ++symmetric_hits;
    }
  }
  inv_mu.emit(report, inverse_count);
  inv_less.emit(report, inverse_count);
  inv_dim.emit(report, inverse_count);
  report.observe("inverse.closed-form", "wedge^eta o Delta^{eta^{-1}} = det(eta + eta^T)/det(eta) id at " +
                                            std::to_string(formula_hits) + "/" + std::to_string(tested) + " points" +
                                            (formula_miss.empty() ? "" : "; miss at " + formula_miss));
  report.observe("inverse.symmetric", std::to_string(symmetric_hits) + "/" + std::to_string(symmetric_total) +
                                          " symmetric eta give 4 id");

  // The 2 x 2 lemma: constrained matrices, then unconstrained ones.
  ClaimTally forward("lemma.forward"), converse("lemma.converse"), contain("lemma.containment"), cases("lemma.cases");
  const auto id2 = RingMatrix<Rational>::identity(2);
  for (std::size_t k = 0; k < lemma_count; ++k) {
    Rational a;
    do a = rng.rational(); while (a == Rational(1));
    const Rational b = rng.rational(), c = rng.rational();
    const Rational d = (b * c + a - Rational(1)) / (a - Rational(1));
    const auto m = RingMatrix<Rational>::from_rows({{a, b}, {c, d}});
    const std::string where = "A=" + matrix_text(m.to_strings());
    const bool constrained = lemma_constraint(m);
    forward.record(constrained && lemma_product(m).is_zero(), where);
    const auto p = id2 - m, q = id2 + m - id2.scaled(m.trace());
    contain.record(image_in_kernel(q, p) && image_in_kernel(p, q), where);
  }
  for (std::size_t k = 0; k < lemma_count; ++k) {
    RingMatrix<Rational> m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = rng.rational();
    const bool zero = lemma_product(m).is_zero();
    converse.record(!zero || lemma_constraint(m), "A=" + matrix_text(m.to_strings()) + (zero ? " (product zero)" : ""));
  }
  // mu = det(id - A) = det A - tr A + 1 for A = xi o eta.
  auto record_case = [&](const BilinearForm<Rational>& eta, const BilinearForm<Rational>& xi) {
    const auto a = composite(xi, eta);
    const Rational m = mu(eta, xi);
    cases.record(lemma_constraint(a) == m.is_zero() && m == det(a) - a.trace() + Rational(1),
                 "eta=" + matrix_text(eta.matrix().to_strings()) + " xi=" + matrix_text(xi.matrix().to_strings()) +
                     " mu=" + m.to_string());
  };
  for (auto c : {AntipodeLessCase::I, AntipodeLessCase::II, AntipodeLessCase::III}) {
    const auto [eta, xi] = case_representative(c);
    record_case(eta, xi);
  }
  for (std::size_t k = 0; k < lemma_count; ++k)
    record_case(random_form(rng, 2, FormRole::Scalar), random_form(rng, 2, FormRole::Coscalar));
  forward.emit(report, lemma_count);
  converse.emit(report, lemma_count);
  contain.emit(report, lemma_count);
  cases.emit(report, lemma_count);

  {
    const auto eta = rational_form(FormRole::Scalar, {{1, 0}, {0, -1}});
    const auto xi = rational_form(FormRole::Coscalar, {{1, 0}, {0, -1}});
    report.observe("eta = xi = diag(1, -1): weak-antipode", weak_text(weak_antipode(build_context(eta, xi))));
  }
  return report;
}

}  // namespace clhopf
