#include "clhopf/hopf_analysis/structure.hpp"

namespace clhopf {

std::string certificate_text(const SolveCertificate& c) {
  std::string out = "rank " + std::to_string(c.rank) + ", augmented rank " + std::to_string(c.augmented_rank) + ", " +
                    std::to_string(c.equations) + " equations in " + std::to_string(c.unknowns) + " unknowns";
  if (c.inconsistent_equation) out += "; inconsistent: " + *c.inconsistent_equation;
  return out;
}

template <Scalar R>
TheoremReport tables_report(const BilinearForm<R>& eta, const BilinearForm<R>& xi) {
  TheoremReport report;
  report.theorem = "tables";
  report.context = fingerprint(eta, xi);
  const auto eta_ext = extend_form(eta.with_role(FormRole::Scalar));
  const auto xi_ext = extend_form(xi.with_role(FormRole::Coscalar));
  auto product = clifford_product_matrix(eta_ext);
  auto coproduct = clifford_coproduct_matrix(xi_ext);
  const bool dual_ok = coproduct == clifford_coproduct_by_duality(xi_ext);
  report.check("context.duality", dual_ok, dual_ok ? "entrywise equal" : "direct and transposed tables differ");

  const auto id = RingMatrix<R>::identity(static_cast<std::size_t>(eta.dim_v()));
  const R m1 = det(id - composite(xi, eta));
  const R m2 = det(id - composite(eta, xi));
  report.check("context.mu", m1 == m2, "det(id - xi eta) = " + m1.to_string() + ", det(id - eta xi) = " + m2.to_string());

  std::vector<R> counit;
  try {
    counit = derive_counit(coproduct);
  } catch (const std::exception& e) {
    report.check("context.counit", false, e.what());
  }
  std::vector<R> unit(basis_size(eta.dim_v()), R(0));
  unit[0] = R(1);
  const bool have_counit = !counit.empty();
  if (!have_counit) counit.assign(unit.size(), R(0));
  const BiconvolutionContext<R> ctx(eta.with_role(FormRole::Scalar), xi.with_role(FormRole::Coscalar),
                                    std::move(product), std::move(coproduct), unit, counit, m1);
  auto emit = [&](const char* id, const std::string& msg, const std::string& ok_text) {
    report.check(id, msg.empty(), msg.empty() ? ok_text : msg);
  };
  const std::string scope = ctx.dim_v() <= 5 ? "all basis triples" : "basis triples at stride 4099";
  emit("context.associative", check_associative(ctx), scope);
  emit("context.coassociative", check_coassociative(ctx), "all basis blades");
  emit("context.unit", check_unit(ctx), "all basis blades");
  if (have_counit) emit("context.counit", check_counit(ctx), "all basis blades");

  if (have_counit) {
    std::string eps;
    for (Blade a = 0; a < ctx.size(); ++a)
      if (!counit[a].is_zero()) eps += (eps.empty() ? "" : ", ") + blade_name(a) + " -> " + counit[a].to_string();
    report.observe("counit", eps);
  }
  report.observe("mu", m1.to_string());

  // Full tables only while they stay readable.
  const int n = ctx.dim_v();
  if (n > 3) {
    report.observe("tables", "omitted for dim V > 3");
    return report;
  }
  MapListing prod{"product", {}};
  for (Blade a : blades_by_grade(n))
    for (Blade b : blades_by_grade(n)) {
      const auto x = ctx.multiply(Multivector<R>::basis(n, a), Multivector<R>::basis(n, b));
      prod.images.push_back({blade_name(a) + " " + blade_name(b), x.canonical_terms(), x.to_string()});
    }
  MapListing cop{"coproduct", {}};
  for (Blade a : blades_by_grade(n)) {
    const auto t = ctx.comultiply(Multivector<R>::basis(n, a));
    MapImage img{blade_name(a), {}, t.to_string()};
    for (const auto& [k, c] : t.coeffs()) img.terms.emplace_back(blade_name(k.first) + "⊗" + blade_name(k.second), c.to_string());
    cop.images.push_back(std::move(img));
  }
  report.maps.push_back(std::move(prod));
  report.maps.push_back(std::move(cop));
  return report;
}

template TheoremReport tables_report(const BilinearForm<Rational>&, const BilinearForm<Rational>&);
template TheoremReport tables_report(const BilinearForm<MultiPoly>&, const BilinearForm<MultiPoly>&);

template <Scalar R>
TheoremReport antipode_report(const BilinearForm<R>& eta, const BilinearForm<R>& xi) {
  TheoremReport report;
  report.theorem = "antipode";
  report.context = fingerprint(eta, xi);
  const auto ctx = build_context(eta, xi);
  const int n = ctx.dim_v();
  const std::size_t big = ctx.size();
  AntipodeResult<R> res;
  try {
    res = solve_antipode(ctx);
  } catch (const MainTheoremViolation& e) {
    report.check("antipode.mu", false, e.what());
    report.not_applicable("antipode.axioms", "solver disagreed with mu");
    report.not_applicable("antipode.coantipode", "solver disagreed with mu");
    return report;
  }
  report.check("antipode.mu", true, "mu = " + res.mu.to_string() + ", " + to_string(res.status));
  report.observe("mu", res.mu.to_string());
  report.observe("status", to_string(res.status));
  report.observe("certificate", certificate_text(res.certificate));
  if (res.status == AntipodeStatus::AntipodeLess) {
    report.not_applicable("antipode.axioms", "no antipode: " + certificate_text(res.certificate));
    report.not_applicable("antipode.coantipode", "no antipode");
    return report;
  }

  const auto id = EndoMap<R>::identity(big);
  const auto& t = *res.scaled_antipode;
  // Over the polynomial ring only T = mu S exists; its axioms carry a factor mu.
  const auto mu_unit = convolution_unit(ctx).scaled(res.mu);
  const bool axioms = convolve(t, id, ctx) == mu_unit && convolve(id, t, ctx) == mu_unit;
  report.check("antipode.axioms", axioms, axioms ? "T*id = mu U = id*T with T = mu S" : "convolution inverse fails");

  const auto dual = coconvolution(ctx);
  const auto tc = coantipode(t);
  const auto dual_unit = convolution_unit(dual).scaled(dual.mu());
  const bool co = dual.mu() == res.mu && convolve(tc, id, dual) == dual_unit && convolve(id, tc, dual) == dual_unit;
  report.check("antipode.coantipode", co, co ? "T^T inverts id in the convolution of Cl(xi, eta)" : "dual axioms fail");

  if (res.antipode) report.maps.push_back(list_map("S", n, *res.antipode));
  report.maps.push_back(list_map("mu*S", n, t));
  report.maps.push_back(list_map("mu*S^c", n, tc));
  return report;
}

template TheoremReport antipode_report(const BilinearForm<Rational>&, const BilinearForm<Rational>&);
template TheoremReport antipode_report(const BilinearForm<MultiPoly>&, const BilinearForm<MultiPoly>&);

}  // namespace clhopf
