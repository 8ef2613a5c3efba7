#include "clhopf/ring/rational.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "clhopf/ring/errors.hpp"

namespace clhopf {

MissingVariable::MissingVariable(std::vector<std::string> missing)
    : std::invalid_argument([&] {
        std::string msg = "assignment is missing variable(s):";
        for (const auto& n : missing) msg += " " + n;
        return msg;
      }()),
      names(std::move(missing)) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    out = Rational(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw std::invalid_argument("malformed decimal literal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    out = Rational(num, scale);
  } else {
    if (!all_digits(s))
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    out = Rational(mpq_class(mpz_class(std::string(s), 10)));
  }
  return negative ? -out : out;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(unsigned e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(q_.get_str(16));
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x.sign() < 0) return false;
  const mpz_class num = x.numerator(), den = x.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

}  // namespace clhopf
