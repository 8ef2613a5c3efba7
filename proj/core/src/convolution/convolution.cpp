#include "clhopf/convolution/convolution.hpp"

#include <algorithm>

namespace clhopf {

const char* to_string(AntipodeStatus s) { return s == AntipodeStatus::Antipodal ? "Antipodal" : "AntipodeLess"; }

namespace {

using Q = Rational;

// Linear system S -> id * S * id = id.
SparseSystem weak_system(const BiconvolutionContext<Q>& ctx) {
  const std::size_t big = ctx.size();
  SparseSystem sys;
  sys.unknowns = big * big;
  for (Blade a = 0; a < big; ++a) {
    std::vector<SparseRow> rows(big);  // indexed by output blade
    for (const auto& outer : ctx.coproduct_terms(a))      // a -> b' (x) d
      for (const auto& inner : ctx.coproduct_terms(outer.left)) {  // b' -> b (x) c
        const Q k = outer.coeff * inner.coeff;
        for (Blade o = 0; o < big; ++o)
          for (const auto& p1 : ctx.product_terms(inner.left, o))
            for (const auto& p2 : ctx.product_terms(p1.out, outer.right)) {
              auto& cell = rows[p2.out][o * big + inner.right];
              cell += k * p1.coeff * p2.coeff;
            }
      }
    for (Blade out = 0; out < big; ++out) sys.add_row(std::move(rows[out]), Q(out == a ? 1 : 0));
  }
  return sys;
}

EndoMap<Q> from_vector(const std::vector<Q>& v, std::size_t big) { return detail::unvectorize(v, big); }

bool is_weak_antipode(const EndoMap<Q>& s, const BiconvolutionContext<Q>& ctx) {
  const auto id = EndoMap<Q>::identity(ctx.size());
  return convolve(convolve(s, id, ctx), s, ctx) == s && convolve(convolve(id, s, ctx), id, ctx) == id;
}

void keep(WeakAntipodeResult& out, EndoMap<Q> s) {
  if (std::find(out.solutions.begin(), out.solutions.end(), s) == out.solutions.end())
    out.solutions.push_back(std::move(s));
}

}  // namespace

WeakAntipodeResult weak_antipode(const BiconvolutionContext<Q>& ctx) {
  const std::size_t big = ctx.size();
  const auto res = solve_sparse(weak_system(ctx));
  WeakAntipodeResult out;
  if (res.status == SolveStatus::NoSolution) {
    out.exhaustive = true;
    return out;
  }
  const std::size_t dim = res.nullspace.size();
  out.affine_dimension = dim;
  const auto s0 = from_vector(res.solution, big);
  const auto id = EndoMap<Q>::identity(big);

  if (dim == 0) {
    out.exhaustive = true;
    out.candidates_tested = 1;
    if (is_weak_antipode(s0, ctx)) keep(out, s0);
    return out;
  }

  if (dim == 1) {
    // On S0 + l K, F(l) = S*id*S - S is quadratic in l entrywise.
    out.exhaustive = true;
    const auto k = from_vector(res.nullspace.front(), big);
    auto f = [&](const Q& l) {
      const auto s = s0 + k.scaled(l);
      return convolve(convolve(s, id, ctx), s, ctx) - s;
    };
    const auto f0 = f(Q(0)), fp = f(Q(1)), fm = f(Q(-1));
    const auto a1 = (fp - fm).scaled(Q(1, 2));
    const auto a2 = (fp + fm).scaled(Q(1, 2)) - f0;
    std::vector<Q> roots;
    bool found_equation = false;
    for (std::size_t i = 0; i < big && !found_equation; ++i)
      for (std::size_t j = 0; j < big && !found_equation; ++j) {
        const Q &c0 = f0(i, j), &c1 = a1(i, j), &c2 = a2(i, j);
        if (c0.is_zero() && c1.is_zero() && c2.is_zero()) continue;
        found_equation = true;
        if (c2.is_zero()) {
          if (!c1.is_zero()) roots.push_back(-c0 / c1);
        } else {
          const Q disc = c1 * c1 - Q(4) * c2 * c0;
          Q root;
          if (rational_sqrt(disc, root)) {
            roots.push_back((-c1 + root) / (Q(2) * c2));
            roots.push_back((-c1 - root) / (Q(2) * c2));
          }
        }
      }
    if (!found_equation) {
      out.whole_line = true;
      out.candidates_tested = 2;
      keep(out, s0);
      keep(out, s0 + k);
      return out;
    }
    for (const auto& l : roots) {
      ++out.candidates_tested;
      const auto s = s0 + k.scaled(l);
      if (is_weak_antipode(s, ctx)) keep(out, s);
    }
    return out;
  }

  // Larger solution sets are only sampled: S0 and S0 +/- K_i.
  std::vector<EndoMap<Q>> candidates{s0};
  for (std::size_t i = 0; i < dim && candidates.size() < 64; ++i) {
    const auto k = from_vector(res.nullspace[i], big);
    candidates.push_back(s0 + k);
    candidates.push_back(s0 - k);
  }
  for (const auto& s : candidates) {
    ++out.candidates_tested;
    if (is_weak_antipode(s, ctx)) keep(out, s);
  }
  return out;
}

}  // namespace clhopf
