#include "clhopf/ring/unipoly.hpp"

#include <algorithm>
#include <set>

namespace clhopf {

UniPoly::UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_descending(const std::vector<Rational>& coeffs) {
  return UniPoly(std::vector<Rational>(coeffs.rbegin(), coeffs.rend()));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return {};
  const Rational inv = c_.back().inverse();
  std::vector<Rational> out(c_);
  for (auto& x : out) x *= inv;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return UniPoly(std::move(out));
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string body = mono.empty() ? mag.to_string() : (mag.is_one() ? mono : mag.to_string() + "*" + mono);
    if (out.empty()) out = (c.sign() < 0 ? "-" : "") + body;
    else out += (c.sign() < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = a.ascending();
  const auto& d = b.ascending();
  if (rem.size() < d.size()) return {UniPoly(), a};
  std::vector<Rational> quot(rem.size() - d.size() + 1, Rational(0));
  const Rational lead_inv = d.back().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + d.size() - 1] * lead_inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.degree() <= 0) return {};
  // Clear denominators to get an integer polynomial.
  mpz_class lcm = 1;
  for (const auto& c : p.ascending()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p.ascending()) z.push_back(mpz_class(c.value() * lcm));
  std::set<Rational> roots;
  std::size_t shift = 0;
  while (shift < z.size() && z[shift] == 0) ++shift;
  if (shift > 0) roots.insert(Rational(0));
  if (shift + 1 >= z.size()) return {roots.begin(), roots.end()};
  const auto num = positive_divisors(z[shift]);
  const auto den = positive_divisors(z.back());
  for (const auto& a : num)
    for (const auto& b : den)
      for (int s : {1, -1}) {
        Rational cand(mpz_class(a * s), b);
        if (p(cand).is_zero()) roots.insert(cand);
      }
  return {roots.begin(), roots.end()};
}

template <Scalar R>
static RingMatrix<R> horner(const UniPoly& p, const RingMatrix<R>& m, auto lift) {
  const std::size_t n = m.rows();
  RingMatrix<R> acc(n, n);
  const auto& c = p.ascending();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = acc(i, i) + lift(c[k]);
  }
  return acc;
}

RingMatrix<Rational> evaluate_at(const UniPoly& p, const RingMatrix<Rational>& m) {
  if (!m.is_square()) throw DimensionError("polynomial of a non-square matrix");
  return horner(p, m, [](const Rational& x) { return x; });
}

RingMatrix<MultiPoly> evaluate_at(const UniPoly& p, const RingMatrix<MultiPoly>& m) {
  if (!m.is_square()) throw DimensionError("polynomial of a non-square matrix");
  return horner(p, m, [](const Rational& x) { return MultiPoly(x); });
}

UniPoly min_poly(const RingMatrix<Rational>& m) {
  if (!m.is_square()) throw DimensionError("min_poly of a non-square matrix");
  const std::size_t n = m.rows();
  struct Row {
    std::vector<Rational> v;
    std::size_t pivot;
    std::vector<Rational> comb;  // v = sum comb[j] vec(M^j)
  };
  std::vector<Row> basis;
  RingMatrix<Rational> power = RingMatrix<Rational>::identity(n);
  for (std::size_t k = 0;; ++k) {
    std::vector<Rational> v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = power(i, j);
    std::vector<Rational> comb(k + 1, Rational(0));
    comb[k] = Rational(1);
    for (const auto& row : basis) {
      if (v[row.pivot].is_zero()) continue;
      const Rational f = v[row.pivot] / row.v[row.pivot];
      for (std::size_t t = 0; t < v.size(); ++t)
        if (!row.v[t].is_zero()) v[t] -= f * row.v[t];
      for (std::size_t t = 0; t < row.comb.size(); ++t) comb[t] -= f * row.comb[t];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
    if (nz == v.end()) return UniPoly(std::move(comb));
    const auto pivot = static_cast<std::size_t>(nz - v.begin());
    basis.push_back({std::move(v), pivot, std::move(comb)});
    power = power * m;
  }
}

}  // namespace clhopf
