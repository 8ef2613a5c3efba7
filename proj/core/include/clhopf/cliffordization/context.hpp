#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "clhopf/cliffordization/clifford.hpp"

namespace clhopf {

template <Scalar R>
struct ProductTerm {
  Blade out;
  R coeff;
};

template <Scalar R>
struct CoproductTerm {
  Blade left;
  Blade right;
  R coeff;
};

// Cl(eta, xi): the Clifford product of eta together with the Clifford
// coproduct of xi on the same exterior algebra. Immutable once built.
template <Scalar R>
class BiconvolutionContext {
 public:
  BiconvolutionContext(BilinearForm<R> eta, BilinearForm<R> xi, RingMatrix<R> product, RingMatrix<R> coproduct,
                       std::vector<R> unit, std::vector<R> counit, R mu)
      : eta_(std::move(eta)),
        xi_(std::move(xi)),
        product_(std::move(product)),
        coproduct_(std::move(coproduct)),
        unit_(std::move(unit)),
        counit_(std::move(counit)),
        mu_(std::move(mu)) {
    const std::size_t big = size();
    if (product_.rows() != big || product_.cols() != big * big || coproduct_.rows() != big * big ||
        coproduct_.cols() != big || unit_.size() != big || counit_.size() != big)
      throw DimensionError("structure tables do not match dim V");
    prod_terms_.resize(big * big);
    for (std::size_t col = 0; col < big * big; ++col)
      for (Blade c = 0; c < big; ++c)
        if (!product_(c, col).is_zero()) prod_terms_[col].push_back({c, product_(c, col)});
    coprod_terms_.resize(big);
    for (Blade a = 0; a < big; ++a)
      for (std::size_t row = 0; row < big * big; ++row)
        if (!coproduct_(row, a).is_zero())
          coprod_terms_[a].push_back(
              {static_cast<Blade>(row / big), static_cast<Blade>(row % big), coproduct_(row, a)});
  }

  int dim_v() const { return eta_.dim_v(); }
  std::size_t size() const { return basis_size(dim_v()); }
  const BilinearForm<R>& eta() const { return eta_; }
  const BilinearForm<R>& xi() const { return xi_; }
  const RingMatrix<R>& product_matrix() const { return product_; }
  const RingMatrix<R>& coproduct_matrix() const { return coproduct_; }
  const std::vector<R>& unit() const { return unit_; }
  const std::vector<R>& counit() const { return counit_; }
  const R& mu() const { return mu_; }

  const std::vector<ProductTerm<R>>& product_terms(Blade a, Blade b) const {
    return prod_terms_[pair_index(dim_v(), a, b)];
  }
  const std::vector<CoproductTerm<R>>& coproduct_terms(Blade a) const { return coprod_terms_[a]; }

  Multivector<R> multiply(const Multivector<R>& x, const Multivector<R>& y) const {
    Multivector<R> out(dim_v());
    for (const auto& [a, ca] : x.coeffs())
      for (const auto& [b, cb] : y.coeffs()) {
        const R k = ca * cb;
        for (const auto& t : product_terms(a, b)) out.add(t.out, t.coeff * k);
      }
    return out;
  }

  TensorElement<R> comultiply(const Multivector<R>& x) const {
    TensorElement<R> out(dim_v());
    for (const auto& [a, ca] : x.coeffs())
      for (const auto& t : coproduct_terms(a)) out.add(t.left, t.right, t.coeff * ca);
    return out;
  }

  Multivector<R> unit_element() const { return Multivector<R>::from_vector(dim_v(), unit_); }

 private:
  BilinearForm<R> eta_;
  BilinearForm<R> xi_;
  RingMatrix<R> product_;
  RingMatrix<R> coproduct_;
  std::vector<R> unit_;
  std::vector<R> counit_;
  R mu_;
  std::vector<std::vector<ProductTerm<R>>> prod_terms_;
  std::vector<std::vector<CoproductTerm<R>>> coprod_terms_;
};

// Each check returns an empty string on success, else a description of the
// first failing basis element.
template <Scalar R>
std::string check_associative(const BiconvolutionContext<R>& ctx) {
  const std::size_t big = ctx.size();
  // Exhaustive up to dim V = 5; a fixed stride through the triples above that.
  const std::size_t total = big * big * big;
  const std::size_t step = ctx.dim_v() <= 5 ? 1 : 4099;
  for (std::size_t k = 0; k < total; k += step) {
    const Blade a = static_cast<Blade>(k / (big * big)), b = static_cast<Blade>((k / big) % big),
                c = static_cast<Blade>(k % big);
    std::map<Blade, R> left, right;
    auto add = [](std::map<Blade, R>& acc, Blade key, const R& v) {
      auto [it, inserted] = acc.try_emplace(key, v);
      if (!inserted) {
        it->second = it->second + v;
        if (it->second.is_zero()) acc.erase(it);
      }
    };
    for (const auto& t1 : ctx.product_terms(a, b))
      for (const auto& t2 : ctx.product_terms(t1.out, c)) add(left, t2.out, t1.coeff * t2.coeff);
    for (const auto& t1 : ctx.product_terms(b, c))
      for (const auto& t2 : ctx.product_terms(a, t1.out)) add(right, t2.out, t1.coeff * t2.coeff);
    if (left != right)
      return "product not associative on (" + blade_name(a) + ", " + blade_name(b) + ", " + blade_name(c) + ")";
  }
  return {};
}

template <Scalar R>
std::string check_coassociative(const BiconvolutionContext<R>& ctx) {
  using Key = std::tuple<Blade, Blade, Blade>;
  for (Blade a = 0; a < ctx.size(); ++a) {
    std::map<Key, R> left, right;
    auto add = [](std::map<Key, R>& acc, const Key& key, const R& v) {
      auto [it, inserted] = acc.try_emplace(key, v);
      if (!inserted) {
        it->second = it->second + v;
        if (it->second.is_zero()) acc.erase(it);
      }
    };
    for (const auto& t : ctx.coproduct_terms(a)) {
      for (const auto& u : ctx.coproduct_terms(t.left)) add(left, {u.left, u.right, t.right}, t.coeff * u.coeff);
      for (const auto& u : ctx.coproduct_terms(t.right)) add(right, {t.left, u.left, u.right}, t.coeff * u.coeff);
    }
    if (left != right) return "coproduct not coassociative on " + blade_name(a);
  }
  return {};
}

template <Scalar R>
std::string check_unit(const BiconvolutionContext<R>& ctx) {
  const auto one = ctx.unit_element();
  for (Blade a = 0; a < ctx.size(); ++a) {
    const auto x = Multivector<R>::basis(ctx.dim_v(), a);
    if (!(ctx.multiply(one, x) == x) || !(ctx.multiply(x, one) == x))
      return "unit is not two-sided on " + blade_name(a);
  }
  return {};
}

template <Scalar R>
std::string check_counit(const BiconvolutionContext<R>& ctx) {
  const auto& eps = ctx.counit();
  for (Blade a = 0; a < ctx.size(); ++a) {
    Multivector<R> left(ctx.dim_v()), right(ctx.dim_v());
    for (const auto& t : ctx.coproduct_terms(a)) {
      left.add(t.right, eps[t.left] * t.coeff);
      right.add(t.left, eps[t.right] * t.coeff);
    }
    const auto x = Multivector<R>::basis(ctx.dim_v(), a);
    if (!(left == x) || !(right == x)) return "counit axiom fails on " + blade_name(a);
  }
  return {};
}

template <Scalar R>
void validate_context(const BiconvolutionContext<R>& ctx) {
  for (const auto& msg : {check_associative(ctx), check_coassociative(ctx), check_unit(ctx), check_counit(ctx)})
    if (!msg.empty()) throw InvariantViolation(msg);
}

template <Scalar R>
BiconvolutionContext<R> build_context(const BilinearForm<R>& eta, const BilinearForm<R>& xi) {
  if (eta.dim_v() != xi.dim_v()) throw DimensionError("eta and xi have different dims");
  const auto eta_ext = extend_form(eta.with_role(FormRole::Scalar));
  const auto xi_ext = extend_form(xi.with_role(FormRole::Coscalar));
  auto product = clifford_product_matrix(eta_ext);
  auto coproduct = clifford_coproduct_matrix(xi_ext);
  if (!(coproduct == clifford_coproduct_by_duality(xi_ext)))
    throw InvariantViolation("direct and duality-transpose coproducts differ");
  auto counit = derive_counit(coproduct);
  std::vector<R> unit(basis_size(eta.dim_v()), R(0));
  unit[0] = R(1);
  R m = mu(eta, xi);
  BiconvolutionContext<R> ctx(eta.with_role(FormRole::Scalar), xi.with_role(FormRole::Coscalar), std::move(product),
                              std::move(coproduct), std::move(unit), std::move(counit), std::move(m));
  validate_context(ctx);
  return ctx;
}

}  // namespace clhopf
