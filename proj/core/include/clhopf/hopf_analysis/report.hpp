#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clhopf/cliffordization/forms.hpp"
#include "clhopf/exterior/multivector.hpp"

namespace clhopf {

enum class ClaimStatus { Pass, Fail, NotApplicable };

const char* to_string(ClaimStatus s);

struct ClaimCheck {
  std::string id;
  std::string anchor;
  ClaimStatus status = ClaimStatus::NotApplicable;
  std::string witness;
};

// Recorded, never asserted.
struct Observation {
  std::string id;
  std::string value;
};

struct ContextFingerprint {
  int dim = 0;
  std::string ring;
  std::vector<std::vector<std::string>> eta;
  std::vector<std::vector<std::string>> xi;
  std::map<std::string, std::string> specialization;
  std::string family;  // set for sweeps instead of a single (eta, xi)
  std::optional<std::uint64_t> seed;
};

struct MapImage {
  std::string input;
  std::vector<std::pair<std::string, std::string>> terms;  // (blade, coefficient)
  std::string text;
};

// An endomorphism listed column by column, e.g. the antipode.
struct MapListing {
  std::string name;
  std::vector<MapImage> images;
};

struct TheoremReport {
  std::string theorem;
  ContextFingerprint context;
  std::vector<ClaimCheck> checks;
  std::vector<Observation> observations;
  std::vector<MapListing> maps;

  bool all_passed() const;
  bool any_failed() const;
  void check(const std::string& id, bool ok, std::string witness);
  void not_applicable(const std::string& id, std::string witness);
  void observe(std::string id, std::string value);
};

// Claim id -> statement it checks. Every id a report emits must be listed.
const std::map<std::string, std::string>& claim_registry();
const std::string& claim_anchor(const std::string& id);

// Pass/fail counts for one claim across a sweep; the first failure is kept as
// the witness.
struct ClaimTally {
  explicit ClaimTally(std::string claim) : id(std::move(claim)) {}

  std::string id;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::string first_failure;
  std::string last_pass;

  void record(bool ok, const std::string& witness);
  void skip() { ++skipped; }
  void emit(TheoremReport& report, std::size_t required = 1) const;
};

template <Scalar R>
ContextFingerprint fingerprint(const BilinearForm<R>& eta, const BilinearForm<R>& xi) {
  ContextFingerprint fp;
  fp.dim = eta.dim_v();
  fp.ring = ScalarTraits<R>::name;
  fp.eta = eta.matrix().to_strings();
  fp.xi = xi.matrix().to_strings();
  return fp;
}

template <Scalar R>
MapListing list_map(std::string name, int n, const RingMatrix<R>& f) {
  MapListing out{std::move(name), {}};
  for (Blade a : blades_by_grade(n)) {
    const auto img = Multivector<R>::column(n, f, a);
    out.images.push_back({blade_name(a), img.canonical_terms(), img.to_string()});
  }
  return out;
}

std::string matrix_text(const std::vector<std::vector<std::string>>& m);

}  // namespace clhopf
