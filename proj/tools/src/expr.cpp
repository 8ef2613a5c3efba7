#include "clhopf/cli/expr.hpp"

#include <cctype>

namespace clhopf::cli {

ParseError::ParseError(std::string_view text, std::size_t col, const std::string& message)
    : InputError("column " + std::to_string(col) + ": " + message + " in '" + std::string(text) + "'"), column(col) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>& symbols) : text_(text), symbols_(symbols) {}

  MultiPoly parse() {
    MultiPoly out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at = SIZE_MAX) const {
    throw ParseError(text_, (at == SIZE_MAX ? pos_ : at) + 1, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // One operator character; U+2212 counts as '-'.
  char peek() {
    skip_space();
    if (pos_ >= text_.size()) return '\0';
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") return '-';
    return text_[pos_];
  }

  void advance(char c) { pos_ += (c == '-' && text_.substr(pos_, 3) == "\xE2\x88\x92") ? 3 : 1; }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      advance(c);
      MultiPoly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      if (c == '/') fail("division is only allowed inside a rational literal such as 3/2");
      advance(c);
      acc = acc * unary();
    }
    return acc;
  }

  MultiPoly unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      advance(c);
      MultiPoly inner = unary();
      return c == '-' ? -inner : inner;
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (peek() != '^') return base;
    advance('^');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4) fail("exponent too large", start);
    if (peek() == '^') fail("chained exponents need parentheses");
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  MultiPoly primary() {
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_;
      advance(c);
      MultiPoly inner = expr();
      if (peek() != ')') fail("missing ')' for '(' at column " + std::to_string(open + 1));
      advance(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return symbol();
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  MultiPoly number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ - s;
    };
    const std::size_t whole = digits();
    bool decimal = false;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      decimal = true;
      ++pos_;
      if (digits() == 0) fail("malformed decimal literal", start);
    } else if (whole == 0) {
      fail("malformed number", start);
    }
    // "3/2": a slash directly between integer literals.
    if (!decimal && pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      digits();
      if (pos_ < text_.size() && text_[pos_] == '.') fail("denominator must be an integer", start);
    }
    const std::string_view literal = text_.substr(start, pos_ - start);
    try {
      return MultiPoly(Rational::parse(literal));
    } catch (const std::exception& e) {
      fail(e.what(), start);
    }
  }

  MultiPoly symbol() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (!symbols_.count(name)) fail("unknown symbol '" + name + "'", start);
    return MultiPoly::variable(name);
  }

  std::string_view text_;
  const std::set<std::string>& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_expr(std::string_view text, const std::set<std::string>& symbols) {
  return Parser(text, symbols).parse();
}

}  // namespace clhopf::cli
