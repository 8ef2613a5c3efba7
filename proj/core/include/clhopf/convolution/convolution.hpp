#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clhopf/cliffordization/context.hpp"

namespace clhopf {

// Endomorphisms of Cl are N x N matrices whose column A is the image of e_A.
template <Scalar R>
using EndoMap = RingMatrix<R>;

// f * g = m o (f (x) g) o D.
template <Scalar R>
EndoMap<R> convolve(const EndoMap<R>& f, const EndoMap<R>& g, const BiconvolutionContext<R>& ctx) {
  const std::size_t big = ctx.size();
  if (f.rows() != big || f.cols() != big || g.rows() != big || g.cols() != big)
    throw DimensionError("convolve: maps do not match the context");
  EndoMap<R> out(big, big);
  for (Blade a = 0; a < big; ++a)
    for (const auto& t : ctx.coproduct_terms(a))
      for (Blade i = 0; i < big; ++i) {
        if (f(i, t.left).is_zero()) continue;
        const R fi = f(i, t.left) * t.coeff;
        for (Blade j = 0; j < big; ++j) {
          if (g(j, t.right).is_zero()) continue;
          const R k = fi * g(j, t.right);
          for (const auto& p : ctx.product_terms(i, j)) out(p.out, a) = out(p.out, a) + p.coeff * k;
        }
      }
  return out;
}

// U = u o eps.
template <Scalar R>
EndoMap<R> convolution_unit(const BiconvolutionContext<R>& ctx) {
  const std::size_t big = ctx.size();
  EndoMap<R> u(big, big);
  for (std::size_t o = 0; o < big; ++o)
    for (std::size_t a = 0; a < big; ++a) u(o, a) = ctx.unit()[o] * ctx.counit()[a];
  return u;
}

enum class AntipodeStatus { Antipodal, AntipodeLess };

const char* to_string(AntipodeStatus s);

// Rank data of the linear system id * S = U (rows: output blade x input blade,
// unknowns: entries of S).
struct SolveCertificate {
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::optional<std::string> inconsistent_equation;
  std::string denominator;
};

template <Scalar R>
struct AntipodeResult {
  AntipodeStatus status = AntipodeStatus::AntipodeLess;
  // S itself; only over a field.
  std::optional<EndoMap<R>> antipode;
  // T = mu * S; over the polynomial ring this is the only form available.
  std::optional<EndoMap<R>> scaled_antipode;
  R mu{0};
  SolveCertificate certificate;
};

// Raised when solvability of id * S = U and mu != 0 disagree.
struct MainTheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

// Rows (O, A) and columns (o, c) of the linear map S -> id * S.
template <Scalar R>
RingMatrix<R> left_convolution_system(const BiconvolutionContext<R>& ctx) {
  const std::size_t big = ctx.size();
  RingMatrix<R> m(big * big, big * big);
  for (Blade a = 0; a < big; ++a)
    for (const auto& t : ctx.coproduct_terms(a))
      for (Blade o = 0; o < big; ++o)
        for (const auto& p : ctx.product_terms(t.left, o)) {
          auto& cell = m(p.out * big + a, o * big + t.right);
          cell = cell + t.coeff * p.coeff;
        }
  return m;
}

template <Scalar R>
std::vector<R> vectorize(const EndoMap<R>& f) {
  std::vector<R> v;
  v.reserve(f.rows() * f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) v.push_back(f(i, j));
  return v;
}

template <Scalar R>
EndoMap<R> unvectorize(const std::vector<R>& v, std::size_t big) {
  EndoMap<R> f(big, big);
  for (std::size_t i = 0; i < big; ++i)
    for (std::size_t j = 0; j < big; ++j) f(i, j) = v[i * big + j];
  return f;
}

}  // namespace detail

template <Scalar R>
AntipodeResult<R> solve_antipode(const BiconvolutionContext<R>& ctx) {
  const std::size_t big = ctx.size();
  const auto system = detail::left_convolution_system(ctx);
  const auto unit = convolution_unit(ctx);
  const auto res = solve_linear(system, detail::vectorize(unit));

  AntipodeResult<R> out;
  out.mu = ctx.mu();
  auto& cert = out.certificate;
  cert.equations = system.rows();
  cert.unknowns = system.cols();
  cert.rank = res.rank;
  cert.augmented_rank = res.augmented_rank;
  cert.pivot_columns = res.pivot_columns;
  cert.denominator = res.denominator.to_string();
  if (res.inconsistent_row) {
    const std::size_t row = *res.inconsistent_row;
    cert.inconsistent_equation = "coefficient of " + blade_name(static_cast<Blade>(row / big)) + " in (id*S)(" +
                                 blade_name(static_cast<Blade>(row % big)) + ")";
  }

  const bool solvable = res.status != SolveStatus::NoSolution;
  if (solvable == out.mu.is_zero())
    throw MainTheoremViolation(std::string("id*S = U is ") + (solvable ? "solvable" : "unsolvable") +
                               " but mu = " + out.mu.to_string());
  if (!solvable) return out;
  // In a finite-dimensional unital algebra a right inverse is two-sided and
  // unique, so a free parameter here means the tables are wrong.
  if (res.status == SolveStatus::NonUnique) throw InvariantViolation("id*S = U has a non-unique solution");

  std::vector<R> t(res.solution.size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = exact_quotient(out.mu * res.solution[k], res.denominator);
  out.status = AntipodeStatus::Antipodal;
  out.scaled_antipode = detail::unvectorize(t, big);
  if constexpr (FieldScalar<R>) {
    std::vector<R> s(res.solution.size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = res.solution[k] / res.denominator;
    out.antipode = detail::unvectorize(s, big);
    if (!(convolve(*out.antipode, EndoMap<R>::identity(big), ctx) == unit))
      throw InvariantViolation("S * id != U");
  } else {
    const auto mu_unit = unit.scaled(out.mu);
    if (!(convolve(*out.scaled_antipode, EndoMap<R>::identity(big), ctx) == mu_unit) ||
        !(convolve(EndoMap<R>::identity(big), *out.scaled_antipode, ctx) == mu_unit))
      throw InvariantViolation("T * id != mu U");
  }
  return out;
}

// Dual side: product and coproduct swap through transposition, as do unit and
// counit. The dual of Cl(eta, xi) has the tables of Cl(xi, eta).
template <Scalar R>
BiconvolutionContext<R> coconvolution(const BiconvolutionContext<R>& ctx) {
  BiconvolutionContext<R> dual(ctx.xi().with_role(FormRole::Scalar), ctx.eta().with_role(FormRole::Coscalar),
                               duality_transpose(ctx.coproduct_matrix()), duality_transpose(ctx.product_matrix()),
                               ctx.counit(), ctx.unit(), mu(ctx.xi(), ctx.eta()));
  validate_context(dual);
  return dual;
}

// Coantipode S^c = S^T.
template <Scalar R>
EndoMap<R> coantipode(const EndoMap<R>& s) {
  return duality_transpose(s);
}

struct WeakAntipodeResult {
  // Dimension of the affine solution set of id*S*id = id; nullopt when empty.
  std::optional<std::size_t> affine_dimension;
  bool exhaustive = false;
  // True when S*id*S = S holds on the whole line (dimension 1 only).
  bool whole_line = false;
  std::size_t candidates_tested = 0;
  std::vector<EndoMap<Rational>> solutions;
};

WeakAntipodeResult weak_antipode(const BiconvolutionContext<Rational>& ctx);

}  // namespace clhopf
