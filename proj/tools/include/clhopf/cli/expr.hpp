#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "clhopf/ring/multipoly.hpp"

namespace clhopf::cli {

// Bad user input (config, expression, flag); the CLI exits with status 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
  ParseError(std::string_view text, std::size_t column, const std::string& message);
  std::size_t column;  // 1-based
};

// Grammar, loosest first:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := number | integer '/' integer | symbol | '(' expr ')'
// Numbers are integers or decimals; '/' is only a rational literal. Symbols
// must be in `symbols`.
MultiPoly parse_expr(std::string_view text, const std::set<std::string>& symbols);

}  // namespace clhopf::cli
