#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "clhopf/cli/emit.hpp"
#include "clhopf/cli/run.hpp"
#include "clhopf/hopf_analysis.hpp"

using namespace clhopf;

namespace {

struct Verdict {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> problems;

  void fail(std::string why) {
    pass = false;
    problems.push_back(std::move(why));
  }
};

// Every listed claim must be present and pass; ids in `vacuous` may also be
// not-applicable (nothing to check at the sampled points).
void require(Verdict& v, const TheoremReport& r, std::initializer_list<const char*> ids,
             std::set<std::string> vacuous = {}) {
  for (const char* id : ids) {
    const ClaimCheck* found = nullptr;
    for (const auto& c : r.checks)
      if (c.id == id) {
        found = &c;
        if (c.status == ClaimStatus::Fail) break;
      }
    ++v.checked;
    if (found == nullptr) {
      v.fail(std::string(id) + ": not reported");
    } else if (found->status == ClaimStatus::Fail) {
      v.fail(std::string(id) + ": " + found->witness);
    } else if (found->status == ClaimStatus::NotApplicable && !vacuous.count(id)) {
      v.fail(std::string(id) + ": not applicable (" + found->witness + ")");
    }
  }
}

class Suite {
 public:
  explicit Suite(std::uint64_t seed) : seed_(seed) {}

  const TheoremReport& family() { return cached(family_, [] { return verify_parametrized_family(); }); }
  const TheoremReport& sweep() { return cached(sweep_, [&] { return main_theorem_sweep(seed_, 500); }); }
  const TheoremReport& antipodeless() { return cached(antipodeless_, [&] { return antipodeless_suite(seed_, 100, 20); }); }
  const TheoremReport& degenerate() { return cached(degenerate_, [&] { return degenerate_family_report(seed_, 50); }); }
  const TheoremReport& splitting() { return cached(splitting_, [&] { return splitting_sweep(seed_, 200); }); }
  const TheoremReport& degrees() { return cached(degrees_, [&] { return crossing_degree_analysis(seed_, 100, 50); }); }
  std::uint64_t seed() const { return seed_; }

 private:
  template <class F>
  const TheoremReport& cached(std::optional<TheoremReport>& slot, F&& make) {
    if (!slot) slot = make();
    return *slot;
  }

  std::uint64_t seed_;
  std::optional<TheoremReport> family_, sweep_, antipodeless_, degenerate_, splitting_, degrees_;
};

Verdict criterion_1(Suite& s) {
  Verdict v;
  require(v, s.family(), {"family.T1", "family.Te12"});
  return v;
}

Verdict criterion_2(Suite& s) {
  Verdict v;
  require(v, s.family(), {"main.i", "main.ii", "main.iii", "main.iv.annihilates", "main.iv.minimal", "family.trace",
                          "family.det"});
  require(v, s.sweep(), {"main.i", "main.ii", "main.iii", "main.iv.annihilates", "main.iv.minimal"});
  return v;
}

Verdict criterion_3(Suite& s) {
  Verdict v;
  require(v, s.sweep(), {"sweep.antipodal-iff-mu", "sweep.inverse-antipodeless"});
  require(v, s.antipodeless(), {"inverse.mu", "inverse.antipodeless", "inverse.dimcl"});
  return v;
}

Verdict criterion_4(Suite& s) {
  Verdict v;
  require(v, s.antipodeless(),
          {"caseI.constraint", "caseI.mu", "caseI.antipodeless", "caseII.constraint", "caseII.mu",
           "caseII.antipodeless", "caseIII.constraint", "caseIII.mu", "caseIII.antipodeless", "lemma.forward",
           "lemma.converse", "lemma.containment", "lemma.cases"});
  return v;
}

Verdict criterion_5(Suite& s) {
  Verdict v;
  require(v, s.degenerate(), {"degenerate.forms", "degenerate.trace", "degenerate.mu", "degenerate.antipodal"});
  return v;
}

Verdict criterion_6(Suite& s) {
  Verdict v;
  require(v, s.splitting(), {"split.theorem", "split.kernel"}, {"split.kernel"});
  return v;
}

Verdict criterion_7(Suite& s) {
  Verdict v;
  require(v, s.degrees(),
          {"crossing.n1.det", "crossing.n1.trace", "crossing.n1.degree2", "crossing.n1.degree3", "crossing.n1.degree4"});
  return v;
}

Verdict criterion_8(Suite&) {
  Verdict v;
  const auto [eta, xi] = zero_forms<Rational>(2);
  require(v, crossing_report(eta, xi), {"crossing.switch", "crossing.involution"});
  return v;
}

Verdict criterion_9(Suite& s) {
  Verdict v;
  require(v, s.degrees(), {"crossing.n2.p-coefficients", "crossing.n2.degree3", "crossing.n2.p-root"},
          {"crossing.n2.p-root"});
  return v;
}

Verdict criterion_10(Suite& s) {
  Verdict v;
  SeededRng rng(s.seed());
  for (int k = 0; k < 40; ++k) {
    const int n = k < 36 ? 1 + k % 3 : 4;
    const auto eta = random_form(rng, n, FormRole::Scalar), xi = random_form(rng, n, FormRole::Coscalar);
    require(v, tables_report(eta, xi),
            {"context.associative", "context.coassociative", "context.unit", "context.counit", "context.duality"});
  }
  const auto [peta, pxi] = parametrized_forms();
  require(v, tables_report(peta, pxi),
          {"context.associative", "context.coassociative", "context.unit", "context.counit", "context.duality"});

  for (int n = 1; n <= 5; ++n) {
    const auto sw = graded_switch_matrix<Rational>(n);
    ++v.checked;
    if (!(sw * sw == RingMatrix<Rational>::identity(sw.rows())))
      v.fail("graded switch is not an involution at dim V = " + std::to_string(n));
  }

  cli::JobConfig job;
  job.commands = {"sweep", "family", "splitting", "gl"};
  job.seed = s.seed();
  job.count = 100;
  const auto first = cli::render_json(cli::run(job));
  const auto second = cli::render_json(cli::run(job));
  ++v.checked;
  if (first != second) v.fail("two runs with seed " + std::to_string(s.seed()) + " produced different reports");
  return v;
}

struct Criterion {
  const char* title;
  std::function<Verdict(Suite&)> run;
};

const std::map<int, Criterion>& criteria() {
  static const std::map<int, Criterion> all{
      {1, {"mu S values on the six-parameter family", criterion_1}},
      {2, {"Main Theorem, symbolic and 500-point sweep", criterion_2}},
      {3, {"antipode iff mu != 0; xi = eta^-1", criterion_3}},
      {4, {"antipode-less cases I-III and the 2x2 lemma", criterion_4}},
      {5, {"degenerate family t = +-rs, z = +-uv", criterion_5}},
      {6, {"splitting on the antisymmetric family", criterion_6}},
      {7, {"crossing at dim V = 1", criterion_7}},
      {8, {"crossing of Cl(0, 0) at dim V = 2", criterion_8}},
      {9, {"crossing degree on the antisymmetric family", criterion_9}},
      {10, {"property suites and reproducibility", criterion_10}},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clhopf acceptance suite"};
  std::vector<int> selected;
  std::uint64_t seed = kDefaultSeed;
  bool verbose = false;
  app.add_option("--criterion", selected, "criterion number (repeatable; default all)")->check(CLI::Range(1, 10));
  app.add_option("--seed", seed, "seed for the sampled sweeps");
  app.add_flag("--verbose", verbose, "print every failing claim");
  CLI11_PARSE(app, argc, argv);
  if (selected.empty())
    for (const auto& [n, c] : criteria()) selected.push_back(n);

  Suite suite(seed);
  int failed = 0;
  for (int n : selected) {
    const auto& c = criteria().at(n);
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run(suite);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << n << ": " << c.title << " (" << v.checked
              << " checks, " << ms << " ms)\n";
    const std::size_t shown = verbose ? v.problems.size() : std::min<std::size_t>(v.problems.size(), 3);
    for (std::size_t k = 0; k < shown; ++k) std::cout << "      " << v.problems[k] << "\n";
    if (shown < v.problems.size()) std::cout << "      (" << v.problems.size() - shown << " more)\n";
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
