#include "clhopf/hopf_analysis/crossing.hpp"

#include <map>
#include <tuple>

#include "clhopf/hopf_analysis/structure.hpp"

namespace clhopf {

namespace {

using Tensor = TensorElement<Rational>;

void accumulate(SparseRow& row, std::size_t col, const Rational& v) {
  auto [it, inserted] = row.try_emplace(col, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

Tensor sigma_apply(const CrossingMatrix& sigma, int n, Blade b, Blade c) {
  const std::size_t big = basis_size(n);
  Tensor out(n);
  const std::size_t col = b * big + c;
  for (std::size_t row = 0; row < big * big; ++row)
    if (!sigma(row, col).is_zero())
      out.add(static_cast<Blade>(row / big), static_cast<Blade>(row % big), sigma(row, col));
  return out;
}

Tensor delta_of_product(const BiconvolutionContext<Rational>& ctx, Blade x, Blade y) {
  Tensor out(ctx.dim_v());
  for (const auto& t : ctx.product_terms(x, y))
    for (const auto& u : ctx.coproduct_terms(t.out)) out.add(u.left, u.right, t.coeff * u.coeff);
  return out;
}

}  // namespace

SparseSystem crossing_system(const BiconvolutionContext<Rational>& ctx) {
  const std::size_t big = ctx.size();
  const std::size_t nn = big * big;
  SparseSystem sys;
  sys.unknowns = nn * nn;
  for (Blade x = 0; x < big; ++x)
    for (Blade y = 0; y < big; ++y) {
      std::map<std::size_t, SparseRow> rows;
      std::map<std::size_t, Rational> rhs;
      const Tensor lhs = delta_of_product(ctx, x, y);
      for (const auto& [k, c] : lhs.coeffs()) rhs[k.first * big + k.second] = c;
      for (const auto& tx : ctx.coproduct_terms(x))
        for (const auto& ty : ctx.coproduct_terms(y)) {
          const Rational k = tx.coeff * ty.coeff;
          const std::size_t in = tx.right * big + ty.left;
          for (Blade b = 0; b < big; ++b)
            for (const auto& p : ctx.product_terms(tx.left, b))
              for (Blade c = 0; c < big; ++c)
                for (const auto& q : ctx.product_terms(c, ty.right))
                  accumulate(rows[p.out * big + q.out], (b * big + c) * nn + in, k * p.coeff * q.coeff);
        }
      for (auto& [pq, row] : rows) {
        auto it = rhs.find(pq);
        const Rational value = it == rhs.end() ? Rational(0) : it->second;
        if (it != rhs.end()) rhs.erase(it);
        if (row.empty() && value.is_zero()) continue;
        sys.add_row(std::move(row), value);
      }
      for (const auto& [pq, value] : rhs) sys.add_row(SparseRow{}, value);
    }
  return sys;
}

std::optional<std::size_t> crossing_solution_dimension(const BiconvolutionContext<Rational>& ctx) {
  const auto sys = crossing_system(ctx);
  const auto res = solve_sparse(sys);
  if (res.status == SolveStatus::NoSolution) return std::nullopt;
  return sys.unknowns - res.rank;
}

Tensor crossed_product(const BiconvolutionContext<Rational>& ctx, const CrossingMatrix& sigma, const Tensor& x,
                       const Tensor& y) {
  const int n = ctx.dim_v();
  Tensor out(n);
  for (const auto& [kx, cx] : x.coeffs())
    for (const auto& [ky, cy] : y.coeffs()) {
      const Rational k = cx * cy;
      const Tensor crossed = sigma_apply(sigma, n, kx.second, ky.first);
      for (const auto& [ks, cs] : crossed.coeffs())
        for (const auto& p : ctx.product_terms(kx.first, ks.first))
          for (const auto& q : ctx.product_terms(ks.second, ky.second)) out.add(p.out, q.out, k * cs * p.coeff * q.coeff);
    }
  return out;
}

CrossingMatrix crossing_from_antipode(const BiconvolutionContext<Rational>& ctx, const EndoMap<Rational>& s) {
  const int n = ctx.dim_v();
  const std::size_t big = ctx.size();
  using MV = Multivector<Rational>;
  CrossingMatrix sigma(big * big, big * big);
  for (Blade a = 0; a < big; ++a)
    for (Blade b = 0; b < big; ++b) {
      Tensor acc(n);
      for (const auto& ta : ctx.coproduct_terms(a)) {
        const MV sa = MV::column(n, s, ta.left);
        for (const auto& tb : ctx.coproduct_terms(b)) {
          const MV sb = MV::column(n, s, tb.right);
          const Rational k = ta.coeff * tb.coeff;
          const Tensor middle = delta_of_product(ctx, ta.right, tb.left);
          for (const auto& [kd, cd] : middle.coeffs()) {
            const MV left = ctx.multiply(sa, MV::basis(n, kd.first));
            const MV right = ctx.multiply(MV::basis(n, kd.second), sb);
            for (const auto& [l, cl] : left.coeffs())
              for (const auto& [r, cr] : right.coeffs()) acc.add(l, r, k * cd * cl * cr);
          }
        }
      }
      for (const auto& [key, c] : acc.coeffs()) sigma(key.first * big + key.second, a * big + b) = c;
    }
  return sigma;
}

CrossingResiduals crossing_residuals(const BiconvolutionContext<Rational>& ctx, const CrossingMatrix& sigma) {
  const int n = ctx.dim_v();
  const std::size_t big = ctx.size();
  const std::size_t nn = big * big;
  CrossingResiduals out;

  const auto sys = crossing_system(ctx);
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    Rational lhs(0);
    for (const auto& [col, v] : sys.rows[r]) lhs += v * sigma(col / nn, col % nn);
    if (lhs != sys.rhs[r]) ++out.factorization;
  }

  for (Blade x = 0; x < big; ++x)
    for (Blade y = 0; y < big; ++y) {
      const Tensor want = delta_of_product(ctx, x, y);
      const auto dx = ctx.comultiply(Multivector<Rational>::basis(n, x));
      const auto dy = ctx.comultiply(Multivector<Rational>::basis(n, y));
      if (!(crossed_product(ctx, sigma, dx, dy) == want)) ++out.multiplicative;

      // Crossed coproduct of x (x) y on Cl (x) Cl, then m (x) m.
      using Key4 = std::tuple<Blade, Blade, Blade, Blade>;
      std::map<Key4, Rational> four;
      for (const auto& [kx, cx] : dx.coeffs())
        for (const auto& [ky, cy] : dy.coeffs()) {
          const Tensor crossed = sigma_apply(sigma, n, kx.second, ky.first);
          for (const auto& [ks, cs] : crossed.coeffs()) {
            auto& cell = four[{kx.first, ks.first, ks.second, ky.second}];
            cell += cx * cy * cs;
          }
        }
      Tensor got(n);
      for (const auto& [k, c] : four) {
        if (c.is_zero()) continue;
        for (const auto& p : ctx.product_terms(std::get<0>(k), std::get<1>(k)))
          for (const auto& q : ctx.product_terms(std::get<2>(k), std::get<3>(k))) got.add(p.out, q.out, c * p.coeff * q.coeff);
      }
      if (!(got == want)) ++out.comultiplicative;
    }
  return out;
}

CrossingMap build_crossing(const BiconvolutionContext<Rational>& ctx) {
  if (ctx.dim_v() > 3) throw DimensionError("crossing solve is limited to dim V <= 3");
  const auto s = solve_antipode(ctx);
  if (s.status != AntipodeStatus::Antipodal) throw std::invalid_argument("crossing needs an antipodal context");
  const std::size_t big = ctx.size();
  const std::size_t nn = big * big;
  const auto sys = crossing_system(ctx);
  const auto res = solve_sparse(sys);
  if (res.status == SolveStatus::NoSolution) throw InvariantViolation("crossing equations are inconsistent");
  CrossingMap out;
  out.solution_dimension = sys.unknowns - res.rank;
  out.sigma = CrossingMatrix(nn, nn);
  for (std::size_t k = 0; k < sys.unknowns; ++k)
    if (!res.solution[k].is_zero()) out.sigma(k / nn, k % nn) = res.solution[k];
  out.residuals = crossing_residuals(ctx, out.sigma);
  out.formula_agrees = crossing_from_antipode(ctx, *s.antipode) == out.sigma;
  return out;
}

DegreeInfo crossing_degree(const CrossingMatrix& sigma) {
  DegreeInfo d;
  d.min_poly = min_poly(sigma);
  d.strict_degree = d.min_poly.degree();
  d.distinct = square_free_part(d.min_poly).degree();
  return d;
}

UniPoly n1_degree3_cubic() { return UniPoly::from_descending({Rational(1), Rational(-4), Rational(1), Rational(-2)}); }

UniPoly theorem_p() {
  auto f = [](std::initializer_list<long> factors, int sign) {
    Rational c(sign);
    for (long k : factors) c *= Rational(k);
    return c;
  };
  return UniPoly({f({2, 2, 2}, 1), f({3, 3, 17}, -1), f({3, 11}, 1), f({3, 107}, 1), f({2, 97}, 1),
                  f({2, 2, 3, 17}, -1), f({5, 41}, -1), f({109}, -1), f({167}, -1), f({2, 2, 2, 2}, 1),
                  f({2, 2, 3, 7}, 1), f({37}, 1), f({2, 3}, -1)});
}

std::vector<Rational> theorem_p_expected() {
  std::vector<Rational> out;
  for (long c : {8, -153, 33, 321, 194, -204, -205, -109, -167, 16, 84, 37, -6}) out.emplace_back(c);
  return out;
}

TheoremReport crossing_report(const BilinearForm<Rational>& eta, const BilinearForm<Rational>& xi) {
  TheoremReport report;
  report.theorem = "crossing";
  report.context = fingerprint(eta, xi);
  const auto ctx = build_context(eta, xi);
  const int n = ctx.dim_v();
  static const char* ids[] = {"crossing.residual", "crossing.multiplicative", "crossing.comultiplicative",
                              "crossing.unique", "crossing.formula"};
  const bool grassmann = eta.is_zero() && xi.is_zero();
  auto skip_all = [&](const std::string& why) {
    for (const char* id : ids) report.not_applicable(id, why);
    if (grassmann) {
      report.not_applicable("crossing.switch", why);
      report.not_applicable("crossing.involution", why);
    }
  };
  if (n > 3) {
    skip_all("crossing solve is limited to dim V <= 3");
    return report;
  }
  const auto s = solve_antipode(ctx);
  report.observe("mu", s.mu.to_string());
  if (s.status != AntipodeStatus::Antipodal) {
    const auto dim = crossing_solution_dimension(ctx);
    report.observe("crossing solution dimension", dim ? std::to_string(*dim) : std::string("inconsistent"));
    skip_all("no antipode");
    return report;
  }
  const auto cm = build_crossing(ctx);
  const auto& r = cm.residuals;
  report.check("crossing.residual", r.factorization == 0, std::to_string(r.factorization) + " violated equations");
  report.check("crossing.multiplicative", r.multiplicative == 0,
               std::to_string(r.multiplicative) + " basis pairs violate Delta(xy) = Delta(x) Delta(y)");
  report.check("crossing.comultiplicative", r.comultiplicative == 0,
               std::to_string(r.comultiplicative) + " basis pairs violate the cogebra-map identity");
  report.check("crossing.unique", cm.solution_dimension == 0,
               "solution space dimension " + std::to_string(cm.solution_dimension));
  report.check("crossing.formula", cm.formula_agrees,
               cm.formula_agrees ? "antipode formula equals the solved crossing" : "antipode formula differs");
  if (grassmann) {
    const bool sw = cm.sigma == graded_switch_matrix<Rational>(n);
    report.check("crossing.switch", sw, sw ? "entrywise equal to the graded switch" : "differs from the graded switch");
    const auto id = CrossingMatrix::identity(cm.sigma.rows());
    const bool inv = cm.sigma * cm.sigma == id;
    report.check("crossing.involution", inv, inv ? "sigma^2 = id" : "sigma^2 != id");
  }
  const auto deg = crossing_degree(cm.sigma);
  report.observe("trace(sigma)", cm.sigma.trace().to_string());
  if (n == 1) report.observe("det(sigma)", det(cm.sigma).to_string());
  report.observe("minimal polynomial", deg.min_poly.to_string());
  report.observe("degree (distinct eigenvalues)", std::to_string(deg.distinct));
  report.observe("degree (minimal polynomial)", std::to_string(deg.strict_degree));
  return report;
}

TheoremReport crossing_degree_analysis(std::uint64_t seed, std::size_t n1_count, std::size_t n2_count) {
  TheoremReport report;
  report.theorem = "degree-analysis";
  report.context.ring = "rational";
  report.context.family = "dim V = 1: eta = [[1]], xi = [[1 - mu]]; dim V = 2: eta = [[0, t], [-t, 0]], xi = [[0, z], [-z, 0]]";
  report.context.seed = seed;
  SeededRng rng(seed);

  ClaimTally det1("crossing.n1.det"), tr1("crossing.n1.trace"), d2("crossing.n1.degree2"), d3("crossing.n1.degree3"),
      d4("crossing.n1.degree4");
  const UniPoly cubic = n1_degree3_cubic();
  std::vector<Rational> mus{Rational(1), Rational(2), Rational(4), Rational(3)};
  while (mus.size() < n1_count + 4) {
    const Rational m = rng.nonzero_rational(39, 4);
    if (m.abs() < Rational(10)) mus.push_back(m);
  }
  std::map<int, std::size_t> n1_histogram, n1_strict;
  for (const auto& m : mus) {
    const auto eta = rational_form(FormRole::Scalar, {{1}});
    const BilinearForm<Rational> xi(FormRole::Coscalar, RingMatrix<Rational>::from_rows({{Rational(1) - m}}));
    const auto ctx = build_context(eta, xi);
    const auto cm = build_crossing(ctx);
    const std::string where = "mu=" + m.to_string();
    const Rational want_det = (Rational(1) - Rational(2) / m).pow(2);
    const Rational got_det = det(cm.sigma);
    det1.record(got_det == want_det, where + ": det = " + got_det.to_string());
    tr1.record(cm.sigma.trace() == Rational(1) - m, where + ": tr = " + cm.sigma.trace().to_string());
    const auto deg = crossing_degree(cm.sigma);
    ++n1_histogram[deg.distinct];
    ++n1_strict[deg.strict_degree];
    const bool special = m == Rational(1) || m == Rational(2) || m == Rational(4);
    const bool on_cubic = cubic(m).is_zero();
    const std::string dw = where + ": degree " + std::to_string(deg.distinct) + ", min poly " + deg.min_poly.to_string();
    d2.record((deg.distinct == 2) == special, dw);
    d3.record((deg.distinct == 3) == on_cubic, dw);
    d4.record((deg.distinct == 4) == (!special && !on_cubic), dw);
  }
  det1.emit(report, n1_count);
  tr1.emit(report, n1_count);
  d2.emit(report, n1_count);
  const auto cubic_roots = rational_roots(cubic);
  report.observe("crossing.n1.cubic-rational-roots",
                 cubic_roots.empty() ? "none (rational root test), so degree 3 cannot occur over Q"
                                     : std::to_string(cubic_roots.size()));
  d3.emit(report, n1_count);
  d4.emit(report, n1_count);
  auto histogram_text = [](const std::map<int, std::size_t>& h) {
    std::string out;
    for (const auto& [d, c] : h) out += (out.empty() ? "" : ", ") + std::string("degree ") + std::to_string(d) + ": " + std::to_string(c);
    return out;
  };
  report.observe("crossing.n1.distinct-degrees", histogram_text(n1_histogram));
  report.observe("crossing.n1.minimal-polynomial-degrees", histogram_text(n1_strict));

  const UniPoly p = theorem_p();
  const bool coeff_ok = p.ascending() == theorem_p_expected();
  std::string coeff_text;
  for (const auto& c : p.ascending()) coeff_text += (coeff_text.empty() ? "" : ", ") + c.to_string();
  report.check("crossing.n2.p-coefficients", coeff_ok, "(" + coeff_text + ")");
  const auto p_roots = rational_roots(p);

  ClaimTally tr2("crossing.n2.trace"), deg3("crossing.n2.degree3"), proot("crossing.n2.p-root");
  std::map<int, std::size_t> n2_histogram;
  std::size_t other_branch_roots = 0;
  std::string low_degree;
  std::vector<Rational> ws;
  for (const auto& r : p_roots)
    if (!r.is_zero() && r != Rational(-1)) ws.push_back(r);
  while (ws.size() < n2_count + p_roots.size()) {
    const Rational w = rng.nonzero_rational(9, 4);
    if (w != Rational(-1)) ws.push_back(w);
  }
  for (const auto& w : ws) {
    const Rational t = rng.nonzero_rational(5, 2);
    const auto [eta, xi] = antisymmetric_forms(t, w / t);
    const auto ctx = build_context(eta, xi);
    const auto s = solve_antipode(ctx);
    const Rational root = Rational(1) + w;  // sqrt(mu), exact
    const std::string where = "t=" + t.to_string() + ", tz=" + w.to_string();
    if (s.mu != root * root) throw InvariantViolation("mu != (1 + tz)^2 on the antisymmetric family");
    tr2.record(s.scaled_antipode->trace() == Rational(4) * (root - Rational(1)),
               where + ": tr(mu S) = " + s.scaled_antipode->trace().to_string());
    const auto cm = build_crossing(ctx);
    const auto deg = crossing_degree(cm.sigma);
    ++n2_histogram[deg.distinct];
    if (deg.distinct < 9) low_degree += (low_degree.empty() ? "" : ", ") + std::string("tz=") + w.to_string() + ": " + std::to_string(deg.distinct);
    const std::string dw = where + ": degree " + std::to_string(deg.distinct) + " (min poly degree " +
                           std::to_string(deg.strict_degree) + ")";
    if (p(root - Rational(1)).is_zero()) {
      proot.record(deg.distinct <= 2, dw);
      deg3.skip();
    } else {
      deg3.record(deg.distinct == 3, dw);
      proot.skip();
    }
    if (p(-root - Rational(1)).is_zero()) ++other_branch_roots;
  }
  tr2.emit(report, n2_count);
  deg3.emit(report, n2_count);
  if (proot.passed + proot.failed == 0)
    report.not_applicable("crossing.n2.p-root", p_roots.empty() ? "p has no rational root (rational root test)"
                                                                : "no sampled tz hits a rational root of p");
  else
    proot.emit(report);
  report.observe("crossing.n2.distinct-degrees", histogram_text(n2_histogram));
  report.observe("crossing.n2.below-generic", low_degree.empty() ? "none" : low_degree);
  report.observe("crossing.n2.other-branch", "p(-sqrt(mu) - 1) = 0 at " + std::to_string(other_branch_roots) +
                                                 " of " + std::to_string(ws.size()) + " sampled points");

  {
    const auto [eta, xi] = antisymmetric_forms(Rational(1), Rational(-1));
    const auto s = solve_antipode(build_context(eta, xi));
    report.check("crossing.n2.degenerate", s.status == AntipodeStatus::AntipodeLess,
                 "tz = -1: tr(eta o xi) = " + composite(eta, xi).trace().to_string() + ", mu = " + s.mu.to_string() +
                     ", " + to_string(s.status));
  }
  return report;
}

}  // namespace clhopf
