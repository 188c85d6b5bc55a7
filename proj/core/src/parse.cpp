#include "lnd/parse.hpp"

#include <cctype>

namespace lnd {

namespace {

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End: return "end of input";
    case Token::Kind::Newline: return "end of line";
    case Token::Kind::String: return "string \"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, std::string message, std::vector<std::string> expected)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message +
                         (expected.empty() ? std::string() : " (expected " + join(expected) + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      out.push_back({Token::Kind::Newline, "\n", line, col});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\''))
        ++j;
      tok.kind = Token::Kind::Ident;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Token::Kind::Number;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"') throw ParseError(line, col, "unterminated string");
      tok.kind = Token::Kind::String;
      tok.text = std::string(text.substr(i + 1, j - i - 1));
      advance(j - i + 1);
    } else {
      static const char* two[] = {"->", ">=", "<=", "=="};
      tok.kind = Token::Kind::Symbol;
      bool matched = false;
      for (const char* s : two) {
        if (text.substr(i, 2) == s) {
          tok.text = s;
          advance(2);
          matched = true;
          break;
        }
      }
      if (!matched) {
        static const std::string_view singles = "+-*/^()[]{},=:<>";
        if (singles.find(c) == std::string_view::npos)
          throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        tok.text = std::string(1, c);
        advance(1);
      }
    }
    out.push_back(std::move(tok));
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

void TokenCursor::skip_newlines_if_nested() const {
  if (depth_ <= 0) return;
  while (pos_ < tokens_.size() && tokens_[pos_].kind == Token::Kind::Newline) ++pos_;
}

std::size_t TokenCursor::mark() const {
  skip_newlines_if_nested();
  return pos_;
}

std::vector<Token> TokenCursor::between(std::size_t from, std::size_t to) const {
  std::vector<Token> out;
  for (std::size_t i = from; i < to && i < tokens_.size(); ++i)
    if (tokens_[i].kind != Token::Kind::Newline) out.push_back(tokens_[i]);
  return out;
}

std::string render_tokens(const std::vector<Token>& tokens) {
  std::string out;
  const Token* prev = nullptr;
  for (const auto& t : tokens) {
    bool sign = t.kind == Token::Kind::Symbol && (t.text == "+" || t.text == "-");
    bool unary = sign && (!prev || (prev->kind == Token::Kind::Symbol && prev->text != ")"));
    if (sign && !unary) {
      out += " " + t.text + " ";
    } else {
      if (t.kind == Token::Kind::String) {
        out += '"' + t.text + '"';
      } else {
        out += t.text;
      }
      if (t.kind == Token::Kind::Symbol && t.text == ",") out += " ";
    }
    prev = &t;
  }
  return out;
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  skip_newlines_if_nested();
  std::size_t p = pos_;
  for (std::size_t k = 0; k < ahead && p + 1 < tokens_.size(); ++k) {
    ++p;
    while (depth_ > 0 && p + 1 < tokens_.size() && tokens_[p].kind == Token::Kind::Newline) ++p;
  }
  return tokens_[std::min(p, tokens_.size() - 1)];
}

const Token& TokenCursor::next() {
  skip_newlines_if_nested();
  const Token& t = tokens_[std::min(pos_, tokens_.size() - 1)];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenCursor::at_symbol(std::string_view s) const {
  const Token& t = peek();
  return t.kind == Token::Kind::Symbol && t.text == s;
}

bool TokenCursor::at_ident(std::string_view s) const {
  const Token& t = peek();
  return t.kind == Token::Kind::Ident && t.text == s;
}

bool TokenCursor::accept_symbol(std::string_view s) {
  if (!at_symbol(s)) return false;
  next();
  return true;
}

bool TokenCursor::accept_ident(std::string_view s) {
  if (!at_ident(s)) return false;
  next();
  return true;
}

const Token& TokenCursor::expect_symbol(std::string_view s) {
  if (!at_symbol(s)) fail(peek(), "unexpected " + describe(peek()), {"'" + std::string(s) + "'"});
  return next();
}

const Token& TokenCursor::expect_ident(std::string_view s) {
  if (!at_ident(s)) fail(peek(), "unexpected " + describe(peek()), {"'" + std::string(s) + "'"});
  return next();
}

const Token& TokenCursor::expect_kind(Token::Kind kind, std::string_view what) {
  if (peek().kind != kind) fail(peek(), "unexpected " + describe(peek()), {std::string(what)});
  return next();
}

void TokenCursor::fail(const Token& at, const std::string& message,
                       std::vector<std::string> expected) const {
  throw ParseError(at.line, at.column, message, std::move(expected));
}

namespace {

class ExprParser {
 public:
  ExprParser(TokenCursor& cur, const RingPtr& ring, const NameLookup& lookup)
      : cur_(cur), ring_(ring), lookup_(lookup) {}

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (cur_.accept_symbol("+")) {
        acc += term();
      } else if (cur_.accept_symbol("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

 private:
  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (cur_.accept_symbol("*")) {
        acc = acc * unary();
      } else if (cur_.at_symbol("/")) {
        const Token& at = cur_.next();
        Poly d = unary();
        if (!d.is_constant() || d.is_zero())
          cur_.fail(at, "division is only allowed by a non-zero constant");
        acc *= Rat(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (cur_.accept_symbol("-")) return -unary();
    if (cur_.accept_symbol("+")) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (cur_.accept_symbol("^")) {
      const Token& e = cur_.expect_kind(Token::Kind::Number, "integer exponent");
      unsigned long exp = 0;
      try {
        exp = std::stoul(e.text);
      } catch (const std::exception&) {
        cur_.fail(e, "exponent out of range");
      }
      if (exp > 100000) cur_.fail(e, "exponent out of range");
      return base.pow(static_cast<unsigned>(exp));
    }
    return base;
  }

  Poly atom() {
    const Token& t = cur_.peek();
    if (t.kind == Token::Kind::Number) {
      cur_.next();
      Rat r;
      r.set_str(t.text, 10);
      return Poly::constant(ring_, r);
    }
    if (t.kind == Token::Kind::Ident) {
      cur_.next();
      if (auto i = ring_->index_of(t.text)) return Poly::variable(ring_, *i);
      if (lookup_) {
        if (auto p = lookup_(t.text)) return p->in_ring(ring_);
      }
      cur_.fail(t, "unknown variable or polynomial '" + t.text + "'");
    }
    if (t.kind == Token::Kind::Symbol && t.text == "(") {
      cur_.next();
      ++cur_.bracket_depth();
      Poly inner = expr();
      --cur_.bracket_depth();
      cur_.expect_symbol(")");
      return inner;
    }
    cur_.fail(t, "unexpected " + describe(t), {"number", "identifier", "'('"});
  }

  TokenCursor& cur_;
  const RingPtr& ring_;
  const NameLookup& lookup_;
};

}  // namespace

Poly parse_expression(TokenCursor& cur, const RingPtr& ring, const NameLookup& lookup) {
  return ExprParser(cur, ring, lookup).expr();
}

Poly parse_poly(const RingPtr& ring, std::string_view text, const NameLookup& lookup) {
  auto tokens = tokenize(text);
  std::vector<Token> kept;
  for (auto& t : tokens)
    if (t.kind != Token::Kind::Newline) kept.push_back(std::move(t));
  TokenCursor cur(std::move(kept));
  Poly p = parse_expression(cur, ring, lookup);
  if (cur.peek().kind != Token::Kind::End) cur.fail(cur.peek(), "trailing input after expression");
  return p;
}

}  // namespace lnd
