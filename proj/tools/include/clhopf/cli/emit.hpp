#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clhopf/hopf_analysis/report.hpp"

namespace clhopf::cli {

inline constexpr int kSchemaVersion = 1;

struct RunResult {
  std::vector<TheoremReport> reports;
  std::vector<std::string> errors;
  int exit_code = 0;
};

nlohmann::ordered_json report_json(const TheoremReport& report);
nlohmann::ordered_json run_json(const RunResult& result);

// Two-space indented JSON with a trailing newline.
std::string render_json(const RunResult& result);
std::string render_text(const RunResult& result);

}  // namespace clhopf::cli
