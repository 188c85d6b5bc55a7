#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lnd/poly.hpp"

namespace lnd {

struct Token {
  enum class Kind { Ident, Number, Symbol, String, Newline, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

/// Syntax or semantic error with a source position and, for syntax errors,
/// the set of tokens that would have been accepted.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string message, std::vector<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

/// Splits text into tokens. `#` starts a comment running to end of line.
/// Newlines are emitted as tokens; callers that do not care skip them.
std::vector<Token> tokenize(std::string_view text);

/// Forward-only cursor over a token vector.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_symbol(std::string_view s) const;
  bool at_ident(std::string_view s) const;
  bool accept_symbol(std::string_view s);
  bool accept_ident(std::string_view s);
  const Token& expect_symbol(std::string_view s);
  const Token& expect_ident(std::string_view s);
  const Token& expect_kind(Token::Kind kind, std::string_view what);
  /// When positive, newline tokens are skipped transparently.
  int& bracket_depth() { return depth_; }
  /// Position of the next token; with `between` recovers the tokens an
  /// inner parser consumed (newlines dropped).
  std::size_t mark() const;
  std::vector<Token> between(std::size_t from, std::size_t to) const;

  [[noreturn]] void fail(const Token& at, const std::string& message,
                         std::vector<std::string> expected = {}) const;

 private:
  void skip_newlines_if_nested() const;

  std::vector<Token> tokens_;
  mutable std::size_t pos_ = 0;
  int depth_ = 0;
};

/// Resolves identifiers that are not ring variables (named polynomials).
using NameLookup = std::function<std::optional<Poly>(const std::string&)>;

/// Parses a polynomial expression: `+ - * /` (division by non-zero
/// constants only), `^` with a non-negative integer exponent, parentheses,
/// integers, ring variables, and names resolved through `lookup`.
Poly parse_expression(TokenCursor& cur, const RingPtr& ring, const NameLookup& lookup = {});

/// Re-joins tokens of an expression in normalized spacing: binary `+`
/// and `-` spaced, everything else tight, `, ` after commas.
std::string render_tokens(const std::vector<Token>& tokens);

/// Parses a whole string as one polynomial.
Poly parse_poly(const RingPtr& ring, std::string_view text, const NameLookup& lookup = {});

}  // namespace lnd
