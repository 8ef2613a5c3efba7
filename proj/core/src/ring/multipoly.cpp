#include "clhopf/ring/multipoly.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "clhopf/ring/errors.hpp"

namespace clhopf {

namespace {

int variable_rank(const std::string& name) {
  static constexpr std::array<const char*, 6> kFamily{"r", "s", "t", "u", "v", "z"};
  for (std::size_t i = 0; i < kFamily.size(); ++i)
    if (name == kFamily[i]) return static_cast<int>(i);
  return static_cast<int>(kFamily.size());
}

unsigned degree_of(const MultiPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

const MultiPoly::VarList& no_variables() {
  static const MultiPoly::VarList empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}

}  // namespace

bool variable_precedes(const std::string& a, const std::string& b) {
  const int ra = variable_rank(a), rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool MultiPoly::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly() : vars_(no_variables()) {}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(const Rational& c) : vars_(no_variables()) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(VarList vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}

MultiPoly MultiPoly::variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  TermMap t;
  t.emplace(Exponents{1}, Rational(1));
  return MultiPoly(std::make_shared<const std::vector<std::string>>(1, name), std::move(t));
}

bool MultiPoly::same(const VarList& a, const VarList& b) { return a == b || *a == *b; }

MultiPoly::VarList MultiPoly::merged(const VarList& a, const VarList& b) {
  if (same(a, b) || b->empty()) return a;
  if (a->empty()) return b;
  std::vector<std::string> out;
  std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(out),
                 variable_precedes);
  if (out == *a) return a;
  if (out == *b) return b;
  return std::make_shared<const std::vector<std::string>>(std::move(out));
}

MultiPoly MultiPoly::aligned(const VarList& vars) const {
  if (same(vars_, vars)) return MultiPoly(vars, terms_);
  std::vector<std::size_t> slot(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = std::find(vars->begin(), vars->end(), (*vars_)[i]);
    slot[i] = static_cast<std::size_t>(it - vars->begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[slot[i]] = e[i];
    out.emplace(std::move(ne), c);
  }
  return MultiPoly(vars, std::move(out));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Rational MultiPoly::constant_term() const {
  if (terms_.empty()) return Rational(0);
  const auto& last = *terms_.rbegin();
  return degree_of(last.first) == 0 ? last.second : Rational(0);
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

std::set<std::string> MultiPoly::support() const {
  std::set<std::string> out;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) out.insert((*vars_)[i]);
  return out;
}

void MultiPoly::add_scaled(const MultiPoly& o, const Rational& c) {
  if (o.terms_.empty()) return;
  auto vars = merged(vars_, o.vars_);
  if (!same(vars, vars_)) *this = aligned(vars);
  const MultiPoly rhs = o.aligned(vars);
  for (const auto& [e, v] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, v * c);
    if (!inserted) {
      it->second += v * c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, Rational(1));
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, Rational(-1));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  auto vars = MultiPoly::merged(a.vars_, b.vars_);
  const MultiPoly x = a.aligned(vars), y = b.aligned(vars);
  MultiPoly::TermMap out;
  MultiPoly::Exponents e(vars->size());
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return MultiPoly(vars, std::move(out));
}

MultiPoly MultiPoly::operator-() const {
  TermMap out;
  for (const auto& [e, c] : terms_) out.emplace_hint(out.end(), e, -c);
  return MultiPoly(vars_, std::move(out));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (MultiPoly::same(a.vars_, b.vars_)) return a.terms_ == b.terms_;
  auto vars = MultiPoly::merged(a.vars_, b.vars_);
  return a.aligned(vars).terms_ == b.aligned(vars).terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1), base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return MultiPoly();
  TermMap out;
  for (const auto& [e, v] : terms_) out.emplace_hint(out.end(), e, v * c);
  return MultiPoly(vars_, std::move(out));
}

Rational MultiPoly::evaluate(const Assignment& at) const {
  std::vector<std::string> missing;
  for (const auto& name : support())
    if (!at.contains(name)) missing.push_back(name);
  if (!missing.empty()) throw MissingVariable(std::move(missing));
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= at.at((*vars_)[i]).pow(e[i]);
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::specialize(const Assignment& at) const {
  std::vector<const Rational*> value(vars_->size(), nullptr);
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if (auto it = at.find((*vars_)[i]); it != at.end()) value[i] = &it->second;
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponents ne = e;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (value[i] != nullptr && e[i] != 0) {
        coeff *= value[i]->pow(e[i]);
        ne[i] = 0;
      }
    }
    if (coeff.is_zero()) continue;
    auto [it, inserted] = out.try_emplace(std::move(ne), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return MultiPoly(vars_, std::move(out));
}

std::vector<std::string> MultiPoly::term_strings() const {
  std::vector<std::string> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += (*vars_)[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    const Rational mag = c.abs();
    std::string body;
    if (mono.empty()) body = mag.to_string();
    else if (mag.is_one()) body = mono;
    else body = mag.to_string() + '*' + mono;
    out.push_back((c.sign() < 0 ? "-" : "") + body);
  }
  return out;
}

std::string join_signed_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].front() == '-') out += " - " + terms[i].substr(1);
    else out += " + " + terms[i];
  }
  return out;
}

std::string MultiPoly::to_string() const { return join_signed_terms(term_strings()); }

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return MultiPoly();
  if (auto c = b.constant_value()) return a.scaled(c->inverse());
  auto vars = MultiPoly::merged(a.vars_, b.vars_);
  MultiPoly rem = a.aligned(vars);
  const MultiPoly div = b.aligned(vars);
  const auto& [lead_e, lead_c] = *div.terms_.begin();
  MultiPoly::TermMap quot;
  while (!rem.terms_.empty()) {
    const auto& [re, rc] = *rem.terms_.begin();
    MultiPoly::Exponents qe(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      qe[i] = re[i] - lead_e[i];
    }
    const Rational qc = rc / lead_c;
    MultiPoly::TermMap mono;
    mono.emplace(qe, qc);
    quot.emplace(std::move(qe), qc);
    rem -= MultiPoly(vars, std::move(mono)) * div;
  }
  return MultiPoly(vars, std::move(quot));
}

}  // namespace clhopf
