#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clhopf/ring/rational.hpp"

namespace clhopf {

using Assignment = std::map<std::string, Rational>;

// Sparse polynomial in Q[x1..xk]. Variables are kept in canonical order
// (r, s, t, u, v, z first, any others after them by name) so that two
// polynomials built from different inputs compare equal term by term.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  // Graded lexicographic, larger monomials first.
  struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, TermOrder>;
  using VarList = std::shared_ptr<const std::vector<std::string>>;

  MultiPoly();
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& variables() const { return *vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  Rational constant_term() const;
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;
  // Variables that occur with a nonzero exponent.
  std::set<std::string> support() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;
  MultiPoly scaled(const Rational& c) const;

  Rational evaluate(const Assignment& at) const;
  MultiPoly specialize(const Assignment& at) const;

  // "1 + 4*t*z", "-3/2*r^2 + s"; ascending in the term order.
  std::string to_string() const;
  // Individual signed terms in rendering order: {"1", "4*t*z"}.
  std::vector<std::string> term_strings() const;

  // Quotient when b divides a exactly, nullopt otherwise.
  friend std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

 private:
  MultiPoly(VarList vars, TermMap terms);
  MultiPoly aligned(const VarList& vars) const;
  static VarList merged(const VarList& a, const VarList& b);
  static bool same(const VarList& a, const VarList& b);
  void add_scaled(const MultiPoly& o, const Rational& c);

  VarList vars_;
  TermMap terms_;
};

bool variable_precedes(const std::string& a, const std::string& b);

// {"1", "-2*t"} -> "1 - 2*t"; empty -> "0".
std::string join_signed_terms(const std::vector<std::string>& terms);

}  // namespace clhopf
