#include "clhopf/hopf_analysis/gl_action.hpp"

#include "clhopf/convolution/convolution.hpp"

namespace clhopf {

namespace {

// A rank-one 2x2 matrix as x y^T, with x a nonzero column and y read off the
// matching row.
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> rank_one_factors(const RingMatrix<Rational>& m) {
  if (m.rows() != 2 || m.cols() != 2 || m.is_zero() || !det(m).is_zero()) return std::nullopt;
  for (std::size_t j = 0; j < 2; ++j) {
    const std::vector<Rational> x{m(0, j), m(1, j)};
    const std::size_t i = x[0].is_zero() ? 1 : 0;
    if (x[i].is_zero()) continue;
    // m = x y^T: y_k = m(i, k) / x_i
    const std::vector<Rational> y{m(i, 0) / x[i], m(i, 1) / x[i]};
    return std::make_pair(x, y);
  }
  return std::nullopt;
}

}  // namespace

std::optional<RingMatrix<Rational>> rank_one_congruence(const RingMatrix<Rational>& a, const RingMatrix<Rational>& b) {
  const auto fa = rank_one_factors(a);
  const auto fb = rank_one_factors(b);
  if (!fa || !fb) return std::nullopt;
  const auto src = RingMatrix<Rational>::from_rows({{fa->first[0], fa->second[0]}, {fa->first[1], fa->second[1]}});
  const auto dst = RingMatrix<Rational>::from_rows({{fb->first[0], fb->second[0]}, {fb->first[1], fb->second[1]}});
  if (det(src).is_zero() || det(dst).is_zero()) return std::nullopt;
  const auto gt = dst * inverse(src);
  const auto g = gt.transposed();
  if (!(g.transposed() * a * g == b)) return std::nullopt;
  return g;
}

TheoremReport gl_report(std::uint64_t seed, std::size_t count) {
  TheoremReport report;
  report.theorem = "gl-action";
  report.context.ring = "rational";
  report.context.dim = 2;
  report.context.family = "eta -> g^T eta g, xi -> g xi g^T";
  report.context.seed = seed;
  SeededRng rng(seed);

  ClaimTally identity("gl.identity");
  const auto id = RingMatrix<Rational>::identity(2);
  for (std::size_t k = 0; k < count; ++k) {
    const auto eta = random_form(rng, 2, FormRole::Scalar);
    const auto xi = random_form(rng, 2, FormRole::Coscalar);
    const auto [e2, x2] = gl_transform(id, eta, xi);
    identity.record(e2.matrix() == eta.matrix() && x2.matrix() == xi.matrix(),
                    "eta=" + matrix_text(eta.matrix().to_strings()));
  }
  identity.emit(report, count);

  {
    const auto r = MultiPoly::variable("r"), s = MultiPoly::variable("s");
    const MultiPoly zero(Rational(0)), one(Rational(1));
    const auto g = RingMatrix<MultiPoly>::from_rows({{r, zero}, {zero, s}});
    const BilinearForm<MultiPoly> eta(FormRole::Scalar, RingMatrix<MultiPoly>::from_rows({{one, one}, {-one, -one}}));
    const auto xi = BilinearForm<MultiPoly>::zero(FormRole::Coscalar, 2);
    const auto image = gl_transform(g, eta, xi).first.matrix();
    const auto want = RingMatrix<MultiPoly>::from_rows({{r * r, r * s}, {-(r * s), -(s * s)}});
    report.check("gl.diag", image == want, "g^T [[1, 1], [-1, -1]] g = " + matrix_text(image.to_strings()));
  }

  ClaimTally congruence("gl.congruence");
  for (std::size_t k = 0; k < count; ++k) {
    const Rational r = rng.nonzero_rational(), s = rng.nonzero_rational();
    const auto a = RingMatrix<Rational>::from_rows({{r * r, r * s}, {-(r * s), -(s * s)}});
    const auto b = RingMatrix<Rational>::from_rows({{r * r, Rational(2) * r * r * s}, {Rational(0), Rational(0)}});
    const auto g = rank_one_congruence(a, b);
    const std::string where = "r=" + r.to_string() + ", s=" + s.to_string();
    congruence.record(g.has_value(), where + (g ? ": g = " + matrix_text(g->to_strings()) : ": no invertible g"));
  }
  congruence.emit(report, count);

  std::size_t mu_kept = 0, status_kept = 0, trace_kept = 0, trace_compared = 0;
  std::string mu_change;
  for (std::size_t k = 0; k < count; ++k) {
    const auto eta = random_form(rng, 2, FormRole::Scalar);
    const auto xi = random_form(rng, 2, FormRole::Coscalar);
    const auto g = random_invertible(rng, 2);
    const auto [e2, x2] = gl_transform(g, eta, xi);
    const auto before = solve_antipode(build_context(eta, xi));
    const auto after = solve_antipode(build_context(e2, x2));
    if (before.mu == after.mu)
      ++mu_kept;
    else if (mu_change.empty())
      mu_change = "g=" + matrix_text(g.to_strings()) + ": mu " + before.mu.to_string() + " -> " + after.mu.to_string();
    if (before.status == after.status) ++status_kept;
    if (before.scaled_antipode && after.scaled_antipode) {
      ++trace_compared;
      if (before.scaled_antipode->trace() == after.scaled_antipode->trace()) ++trace_kept;
    }
  }
  const std::string of = "/" + std::to_string(count);
  report.observe("orbit: mu unchanged", std::to_string(mu_kept) + of + (mu_change.empty() ? "" : "; e.g. " + mu_change));
  report.observe("orbit: antipodal status unchanged", std::to_string(status_kept) + of);
  report.observe("orbit: tr(mu S) unchanged", std::to_string(trace_kept) + "/" + std::to_string(trace_compared));
  return report;
}

}  // namespace clhopf
