#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clhopf/cli/expr.hpp"
#include "clhopf/hopf_analysis/families.hpp"

namespace clhopf::cli {

enum class CoefficientMode { Rational, Symbolic };

using TextMatrix = std::vector<std::vector<std::string>>;

struct JobConfig {
  int dim = 0;
  CoefficientMode mode = CoefficientMode::Rational;
  std::vector<std::string> symbols;
  std::optional<TextMatrix> eta;
  std::optional<TextMatrix> xi;
  std::vector<Assignment> specializations;
  std::vector<std::string> commands;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> count;  // sweep size override
  std::string output;                // empty: stdout
  std::string format = "json";

  std::set<std::string> symbol_set() const { return {symbols.begin(), symbols.end()}; }
};

// Key/value text (see README) or, when the first non-space character is '{',
// JSON with the same keys.
JobConfig parse_config(const std::string& text);
JobConfig load_config(const std::string& path);

// "r=1, s=3/2"
Assignment parse_specialization(const std::string& text);

// Checks shapes, symbols, modes and command names; throws InputError.
void validate(const JobConfig& config);

const std::vector<std::string>& known_commands();

}  // namespace clhopf::cli
