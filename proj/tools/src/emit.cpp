#include "clhopf/cli/emit.hpp"

#include <sstream>

namespace clhopf::cli {

namespace {

struct Counts {
  std::size_t pass = 0, fail = 0, not_applicable = 0;
  void add(const TheoremReport& r) {
    for (const auto& c : r.checks) {
      if (c.status == ClaimStatus::Pass) ++pass;
      if (c.status == ClaimStatus::Fail) ++fail;
      if (c.status == ClaimStatus::NotApplicable) ++not_applicable;
    }
  }
};

nlohmann::ordered_json counts_json(const Counts& c) {
  nlohmann::ordered_json j;
  j["pass"] = c.pass;
  j["fail"] = c.fail;
  j["not_applicable"] = c.not_applicable;
  return j;
}

std::string status_word(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::NotApplicable: return "N/A ";
  }
  return "?";
}

}  // namespace

nlohmann::ordered_json report_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  auto& ctx = j["context"];
  ctx["dim"] = r.context.dim;
  ctx["ring"] = r.context.ring;
  if (!r.context.eta.empty()) ctx["eta"] = r.context.eta;
  if (!r.context.xi.empty()) ctx["xi"] = r.context.xi;
  if (!r.context.specialization.empty()) {
    nlohmann::ordered_json spec = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.context.specialization) spec[k] = v;
    ctx["specialization"] = spec;
  }
  if (!r.context.family.empty()) ctx["family"] = r.context.family;
  if (r.context.seed) ctx["seed"] = *r.context.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["anchor"] = c.anchor;
    cj["status"] = to_string(c.status);
    cj["witness"] = c.witness;
    j["checks"].push_back(std::move(cj));
  }
  j["observations"] = nlohmann::ordered_json::array();
  for (const auto& o : r.observations) {
    nlohmann::ordered_json oj;
    oj["id"] = o.id;
    oj["value"] = o.value;
    j["observations"].push_back(std::move(oj));
  }
  j["maps"] = nlohmann::ordered_json::array();
  for (const auto& m : r.maps) {
    nlohmann::ordered_json mj;
    mj["name"] = m.name;
    mj["images"] = nlohmann::ordered_json::array();
    for (const auto& img : m.images) {
      nlohmann::ordered_json ij;
      ij["input"] = img.input;
      ij["terms"] = nlohmann::ordered_json::array();
      for (const auto& [blade, coeff] : img.terms) {
        nlohmann::ordered_json tj;
        tj["blade"] = blade;
        tj["coeff"] = coeff;
        ij["terms"].push_back(std::move(tj));
      }
      ij["text"] = img.text;
      mj["images"].push_back(std::move(ij));
    }
    j["maps"].push_back(std::move(mj));
  }
  Counts c;
  c.add(r);
  j["summary"] = counts_json(c);
  return j;
}

nlohmann::ordered_json run_json(const RunResult& result) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["exit_code"] = result.exit_code;
  Counts total;
  for (const auto& r : result.reports) total.add(r);
  j["summary"] = counts_json(total);
  j["errors"] = result.errors;
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : result.reports) j["reports"].push_back(report_json(r));
  return j;
}

std::string render_json(const RunResult& result) { return run_json(result).dump(2) + "\n"; }

std::string render_text(const RunResult& result) {
  std::ostringstream out;
  Counts total;
  for (const auto& r : result.reports) {
    total.add(r);
    out << "== " << r.theorem << " (";
    if (r.context.dim != 0) out << "dim V = " << r.context.dim << ", ";
    out << r.context.ring;
    if (r.context.seed) out << ", seed " << *r.context.seed;
    out << ")\n";
    if (!r.context.eta.empty()) out << "   eta = " << matrix_text(r.context.eta) << "\n";
    if (!r.context.xi.empty()) out << "   xi  = " << matrix_text(r.context.xi) << "\n";
    if (!r.context.family.empty()) out << "   family: " << r.context.family << "\n";
    for (const auto& [k, v] : r.context.specialization) out << "   " << k << " = " << v << "\n";
    std::size_t width = 0;
    for (const auto& c : r.checks) width = std::max(width, c.id.size());
    for (const auto& c : r.checks) {
      out << "  " << status_word(c.status) << "  " << c.id << std::string(width - c.id.size(), ' ') << "  "
          << c.anchor << "\n";
      if (!c.witness.empty()) out << "        " << std::string(width, ' ') << "  " << c.witness << "\n";
    }
    for (const auto& o : r.observations) out << "  obs   " << o.id << ": " << o.value << "\n";
    for (const auto& m : r.maps) {
      out << "  map " << m.name << ":\n";
      std::size_t iw = 0;
      for (const auto& img : m.images) iw = std::max(iw, img.input.size());
      for (const auto& img : m.images)
        out << "    " << img.input << std::string(iw - img.input.size(), ' ') << " -> " << img.text << "\n";
    }
    out << "\n";
  }
  for (const auto& e : result.errors) out << "error: " << e << "\n";
  out << "summary: " << total.pass << " pass, " << total.fail << " fail, " << total.not_applicable
      << " not-applicable; exit " << result.exit_code << "\n";
  return out.str();
}

}  // namespace clhopf::cli
