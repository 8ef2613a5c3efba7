#include "clhopf/hopf_analysis/report.hpp"

#include <stdexcept>

namespace clhopf {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

const std::map<std::string, std::string>& claim_registry() {
  static const std::map<std::string, std::string> registry{
      // structure tables
      {"context.associative", "the Clifford product is associative"},
      {"context.coassociative", "the Clifford coproduct is coassociative"},
      {"context.unit", "1 is a two-sided unit of the Clifford product"},
      {"context.counit", "the derived counit satisfies both counit axioms"},
      {"context.duality", "the coproduct of xi equals the transpose of the product xi induces on the dual side"},
      {"context.mu", "det(id - xi o eta) = det(id - eta o xi)"},
      // antipode
      {"antipode.axioms", "id * S = U = S * id"},
      {"antipode.mu", "an antipode exists iff mu = det(id - xi o eta) != 0"},
      {"antipode.coantipode", "the transposed antipode solves the dual antipode axioms"},
      // main theorem
      {"main.i", "mu S restricted to V equals -id_V"},
      {"main.ii", "det(mu S) = (-1)^{dim V}"},
      {"main.iii", "tr(mu S) = 1/2 tr((eta^T - eta) o (xi - xi^T))"},
      {"main.iv.annihilates", "(mu S + 1)[(mu S - 1)^{dim V} - tr(mu S) mu S] = 0"},
      {"main.iv.minimal", "(x + 1)[(x - 1)^{dim V} - tr(mu S) x] is the minimal polynomial of mu S, "
                          "up to repeated roots that split off"},
      {"family.trace", "tr(mu S) = 4tz for eta = [[r^2, t], [-t, -s^2]], xi = [[u^2, z], [-z, -v^2]]"},
      {"family.T1", "mu S^c(1) = 1 + 4zt + 2t e12 (S^c the coantipode)"},
      {"family.Te12", "mu S^c(e12) = 2z + e12 (S^c the coantipode)"},
      {"family.det", "det(mu S) = 1 on the six-parameter family"},
      // sweeps
      {"sweep.antipodal-iff-mu", "solve_antipode finds an antipode exactly when mu != 0"},
      {"sweep.inverse-antipodeless", "xi = eta^{-1} gives an antipode-less context"},
      {"sweep.polynomial-path", "mu S from the polynomial solve, specialized, equals mu times S from the rational solve"},
      // antipode-less cases
      {"caseI.constraint", "case I: eta, xi symmetric with det(eta o xi) + 1 = tr(eta o xi)"},
      {"caseI.mu", "case I: mu = 0"},
      {"caseI.antipodeless", "case I: no antipode, certified by rank deficiency"},
      {"caseII.constraint", "case II: r^2 = 0, tr(xi o eta) + 1 + tz = 0, z + t det xi = 0"},
      {"caseII.mu", "case II: mu = 0"},
      {"caseII.antipodeless", "case II: no antipode, certified by rank deficiency"},
      {"caseIII.constraint", "case III: v^2 = 0, tz = -1, u^2 = -s^2 z^2"},
      {"caseIII.mu", "case III: mu = 0"},
      {"caseIII.antipodeless", "case III: no antipode, certified by rank deficiency"},
      {"inverse.mu", "xi = eta^{-1}: mu = 0"},
      {"inverse.antipodeless", "xi = eta^{-1}: no antipode"},
      {"inverse.dimcl", "wedge^eta o Delta^{eta^{-1}} = (dim Cl) id_Cl"},
      {"lemma.forward", "det A - tr A + 1 = 0 implies (id - A)(id + A - tr A) = 0"},
      {"lemma.converse", "(id - A)(id + A - tr A) = 0 implies det A - tr A + 1 = 0"},
      {"lemma.containment", "im(id + A - tr A) in ker(id - A) and im(id - A) in ker(id + A - tr A)"},
      {"lemma.cases", "A = xi o eta satisfies det A - tr A + 1 = 0 exactly when mu = 0"},
      // degenerate family
      {"degenerate.forms", "t = +-rs, z = +-uv gives det eta = det xi = 0"},
      {"degenerate.trace", "tr(xi o eta) = (ur +- sv)^2 on t = +-rs, z = +-uv"},
      {"degenerate.mu", "det(id - xi o eta) = 1 - tr(xi o eta) when det eta = det xi = 0"},
      {"degenerate.antipodal", "(ur +- sv)^2 != 1 gives an antipode"},
      // splitting
      {"split.theorem", "antisymmetric antipodal eta, xi: wedge^eta o Delta^xi = id iff tr(xi o eta) = dim Cl, "
                        "eta = 0 or xi = 0"},
      {"split.idempotent.crossed", "split implies (xi^)^2 = xi^ in the sigma-crossed tensor algebra"},
      {"split.idempotent.switch", "split implies (xi^)^2 = xi^ in the graded-switch tensor algebra"},
      {"split.kernel", "split implies (Cl (x) Cl)(1 (x) 1 - xi^) lies in ker wedge^eta"},
      // crossing
      {"crossing.residual", "Delta^xi o wedge^eta = (wedge^eta (x) wedge^eta)(id (x) sigma (x) id)(Delta^xi (x) Delta^xi)"},
      {"crossing.multiplicative", "Delta^xi(xy) = Delta^xi(x) Delta^xi(y) in the sigma-crossed product"},
      {"crossing.comultiplicative", "wedge^eta is a cogebra map for the sigma-crossed coproduct"},
      {"crossing.unique", "the crossing of an antipodal biconvolution is unique"},
      {"crossing.formula", "sigma(a (x) b) = sum (S a1 (x) 1) Delta(a2 b1) (1 (x) S b2)"},
      {"crossing.switch", "Cl(0,0): sigma is the graded switch"},
      {"crossing.involution", "Cl(0,0): sigma^2 = id"},
      {"crossing.n1.det", "dim V = 1: det sigma = (1 - 2/mu)^2"},
      {"crossing.n1.trace", "dim V = 1: tr sigma = 1 - mu"},
      {"crossing.n1.degree2", "dim V = 1: degree(sigma) = 2 iff mu = 1, 2 or 4"},
      {"crossing.n1.degree3", "dim V = 1: degree(sigma) = 3 iff mu^3 - 4mu^2 + mu - 2 = 0"},
      {"crossing.n1.degree4", "dim V = 1: degree(sigma) = 4 otherwise"},
      {"crossing.n2.p-coefficients", "p(x) = 2^3 - 3^2(17)x + ... - (2)(3)x^12 expands to "
                                     "(8, -153, 33, 321, 194, -204, -205, -109, -167, 16, 84, 37, -6)"},
      {"crossing.n2.trace", "tr(mu S) = 4(sqrt(mu) - 1) with sqrt(mu) = 1 + tz"},
      {"crossing.n2.degree3", "dim V = 2, antisymmetric: p(sqrt(mu) - 1) != 0 implies degree(sigma) = 3"},
      {"crossing.n2.p-root", "dim V = 2, antisymmetric: p(sqrt(mu) - 1) = 0 implies degree(sigma) <= 2"},
      {"crossing.n2.degenerate", "dim V = 2, antisymmetric: tr(eta o xi) = 2 leaves no antipode"},
      // GL(V)
      {"gl.identity", "g = id fixes (eta, xi)"},
      {"gl.diag", "g = diag(r, s) maps [[1, 1], [-1, -1]] to [[r^2, rs], [-rs, -s^2]]"},
      {"gl.congruence", "some invertible g maps [[r^2, rs], [-rs, -s^2]] to [[r^2, 2r^2 s], [0, 0]]"},
  };
  return registry;
}

const std::string& claim_anchor(const std::string& id) {
  const auto& reg = claim_registry();
  auto it = reg.find(id);
  if (it == reg.end()) throw std::logic_error("claim id '" + id + "' is not in the registry");
  return it->second;
}

bool TheoremReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == ClaimStatus::Fail) return false;
  return true;
}

bool TheoremReport::any_failed() const { return !all_passed(); }

void TheoremReport::check(const std::string& id, bool ok, std::string witness) {
  checks.push_back({id, claim_anchor(id), ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(witness)});
}

void TheoremReport::not_applicable(const std::string& id, std::string witness) {
  checks.push_back({id, claim_anchor(id), ClaimStatus::NotApplicable, std::move(witness)});
}

void TheoremReport::observe(std::string id, std::string value) {
  observations.push_back({std::move(id), std::move(value)});
}

void ClaimTally::record(bool ok, const std::string& witness) {
  if (ok) {
    ++passed;
    last_pass = witness;
  } else {
    if (failed == 0) first_failure = witness;
    ++failed;
  }
}

void ClaimTally::emit(TheoremReport& report, std::size_t required) const {
  const std::size_t total = passed + failed;
  std::string counts = std::to_string(passed) + "/" + std::to_string(total) + " pass";
  if (skipped != 0) counts += ", " + std::to_string(skipped) + " skipped";
  if (total == 0) {
    report.not_applicable(id, "no applicable points" + (skipped != 0 ? " (" + counts + ")" : std::string()));
    return;
  }
  if (failed != 0) {
    report.check(id, false, counts + "; first failure: " + first_failure);
    return;
  }
  if (passed < required) {
    report.check(id, false, counts + "; needed at least " + std::to_string(required));
    return;
  }
  report.check(id, true, counts + (last_pass.empty() ? std::string() : "; e.g. " + last_pass));
}

std::string matrix_text(const std::vector<std::vector<std::string>>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m[i].size(); ++j) out += (j == 0 ? "" : ", ") + m[i][j];
    out += "]";
  }
  return out + "]";
}

}  // namespace clhopf
