#include <cctype>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "qpart/dsl.hpp"

namespace qpart::dsl {
namespace {

enum class Tok {
  Integer,
  Ident,
  Q,
  Inf,
  Sum,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
  Semicolon,
  Underscore,
  Equals,
  DotDot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Integer:
      return "integer '" + t.text + "'";
    case Tok::Ident:
      return "identifier '" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto emit = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(src.substr(i, len)), line, col});
    i += len;
    col += len;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      emit(Tok::Integer, j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      const std::string_view word = src.substr(i, j - i);
      Tok k = Tok::Ident;
      if (word == "q") {
        k = Tok::Q;
      } else if (word == "inf") {
        k = Tok::Inf;
      } else if (word == "sum") {
        k = Tok::Sum;
      }
      emit(k, j - i);
      continue;
    }
    switch (c) {
      case '+': emit(Tok::Plus, 1); continue;
      case '-': emit(Tok::Minus, 1); continue;
      case '*': emit(Tok::Star, 1); continue;
      case '/': emit(Tok::Slash, 1); continue;
      case '^': emit(Tok::Caret, 1); continue;
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case ',': emit(Tok::Comma, 1); continue;
      case ';': emit(Tok::Semicolon, 1); continue;
      case '_': emit(Tok::Underscore, 1); continue;
      case '=': emit(Tok::Equals, 1); continue;
      case '.':
        if (i + 1 < src.size() && src[i + 1] == '.') {
          emit(Tok::DotDot, 2);
          continue;
        }
        break;
      default:
        break;
    }
    throw ParseError(line, col, "a token", "character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) fail("operator or end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, expected, describe(t));
  }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(what);
    return advance();
  }

  bool bound(const std::string& name) const {
    for (const auto& s : scope_) {
      if (s == name) return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr e;
    if (at(Tok::Minus)) {
      advance();
      e = make({.kind = Expr::Kind::Neg, .lhs = term()});
    } else {
      e = term();
    }
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const auto k = advance().kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      e = make({.kind = k, .lhs = e, .rhs = term()});
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (at(Tok::Star) || at(Tok::Slash)) {
      const auto k = advance().kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div;
      e = make({.kind = k, .lhs = e, .rhs = factor()});
    }
    return e;
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (at(Tok::Caret)) {
      advance();
      b = make({.kind = Expr::Kind::Power, .exponent = int_atom(), .lhs = b});
    }
    return b;
  }

  ExprPtr base() {
    switch (peek().kind) {
      case Tok::Integer: {
        const Token& t = advance();
        return make({.kind = Expr::Kind::Integer, .integer = qpart::Integer(t.text)});
      }
      case Tok::Q:
        return make({.kind = Expr::Kind::QPower, .exponent = qpow_exponent()});
      case Tok::Sum:
        return sum();
      case Tok::Ident: {
        const Token& t = peek();
        if (!bound(t.text)) throw UnboundIndex(t.line, t.column, t.text);
        advance();
        return make({.kind = Expr::Kind::IndexRef, .index = t.text});
      }
      case Tok::LParen: {
        if (ExprPtr p = try_poch()) return p;
        advance();
        ExprPtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail("integer, 'q', Pochhammer symbol, 'sum' or '('");
    }
  }

  // After "q": the exponent, 1 when absent.
  IntExprPtr qpow_exponent() {
    expect(Tok::Q, "'q'");
    if (at(Tok::Caret)) {
      advance();
      return int_atom();
    }
    return IntExpr::literal(1);
  }

  SignedQ signed_q() {
    SignedQ s;
    if (at(Tok::Minus)) {
      advance();
      s.negative = true;
    }
    s.exponent = qpow_exponent();
    return s;
  }

  // A '(' starts a Pochhammer symbol iff it is followed by a signed q-power
  // and then ',' or ';'.
  ExprPtr try_poch() {
    const std::size_t saved = pos_;
    advance();
    const bool starts = at(Tok::Q) || (at(Tok::Minus) && peek(1).kind == Tok::Q);
    if (!starts) {
      pos_ = saved;
      return nullptr;
    }
    SignedQ first;
    try {
      first = signed_q();
    } catch (const ParseError&) {
      pos_ = saved;
      return nullptr;
    }
    if (!at(Tok::Comma) && !at(Tok::Semicolon)) {
      pos_ = saved;
      return nullptr;
    }
    Expr p{.kind = Expr::Kind::Poch};
    p.args.push_back(std::move(first));
    while (at(Tok::Comma)) {
      advance();
      p.args.push_back(signed_q());
    }
    expect(Tok::Semicolon, "',' or ';'");
    if (!at(Tok::Q)) fail("'q' as the Pochhammer base");
    p.step = qpow_exponent();
    expect(Tok::RParen, "')'");
    expect(Tok::Underscore, "'_' after the Pochhammer symbol");
    if (at(Tok::Inf)) {
      advance();
    } else {
      p.length = int_atom();
    }
    return make(std::move(p));
  }

  ExprPtr sum() {
    expect(Tok::Sum, "'sum'");
    expect(Tok::LParen, "'('");
    const Token& name = expect(Tok::Ident, "summation index");
    std::string index = name.text;
    expect(Tok::Equals, "'='");
    Expr s{.kind = Expr::Kind::Sum, .index = index};
    if (at(Tok::Minus) && peek(1).kind == Tok::Inf) {
      advance();
      advance();
    } else {
      s.lower = int_expr();
    }
    expect(Tok::DotDot, "'..'");
    if (at(Tok::Inf)) {
      advance();
    } else {
      if (!s.lower) fail("'inf' (a sum from -inf must run to inf)");
      s.upper = int_expr();
    }
    expect(Tok::Comma, "','");
    scope_.push_back(index);
    s.lhs = expr();
    scope_.pop_back();
    expect(Tok::RParen, "')'");
    return make(std::move(s));
  }

  IntExprPtr int_expr() {
    IntExprPtr e = int_term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const auto k = advance().kind == Tok::Plus ? IntExpr::Kind::Add : IntExpr::Kind::Sub;
      e = IntExpr::binary(k, e, int_term());
    }
    return e;
  }

  IntExprPtr int_term() {
    IntExprPtr e = int_atom();
    while (at(Tok::Star)) {
      advance();
      e = IntExpr::binary(IntExpr::Kind::Mul, e, int_atom());
    }
    return e;
  }

  IntExprPtr int_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Integer: {
        std::int64_t v = 0;
        const auto* end = t.text.data() + t.text.size();
        const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
        if (ec != std::errc() || ptr != end) {
          throw ParseError(t.line, t.column, "an exponent that fits in 64 bits", describe(t));
        }
        advance();
        return IntExpr::literal(v);
      }
      case Tok::Ident:
        if (!bound(t.text)) throw UnboundIndex(t.line, t.column, t.text);
        advance();
        return IntExpr::index(t.text);
      case Tok::Minus:
        advance();
        return IntExpr::negate(int_atom());
      case Tok::LParen: {
        advance();
        IntExprPtr e = int_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        fail("integer expression");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected,
                       std::string found)
    : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
            ": expected " + expected + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

UnboundIndex::UnboundIndex(std::size_t line, std::size_t column, const std::string& name)
    : ParseError(line, column, "an index bound by an enclosing sum",
                 "unbound identifier '" + name + "'") {}

IntExprPtr IntExpr::literal(std::int64_t v) {
  return std::make_shared<const IntExpr>(IntExpr{.kind = Kind::Literal, .value = v});
}

IntExprPtr IntExpr::index(std::string name) {
  return std::make_shared<const IntExpr>(IntExpr{.kind = Kind::Index, .name = std::move(name)});
}

IntExprPtr IntExpr::binary(Kind k, IntExprPtr a, IntExprPtr b) {
  return std::make_shared<const IntExpr>(
      IntExpr{.kind = k, .lhs = std::move(a), .rhs = std::move(b)});
}

IntExprPtr IntExpr::negate(IntExprPtr a) {
  return std::make_shared<const IntExpr>(IntExpr{.kind = Kind::Neg, .lhs = std::move(a)});
}

namespace {

template <typename T>
bool same_ptr(const std::shared_ptr<const T>& a, const std::shared_ptr<const T>& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

}  // namespace

bool operator==(const IntExpr& a, const IntExpr& b) {
  return a.kind == b.kind && a.value == b.value && a.name == b.name && same_ptr(a.lhs, b.lhs) &&
         same_ptr(a.rhs, b.rhs);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.integer != b.integer || a.index != b.index) return false;
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (a.args[i].negative != b.args[i].negative ||
        !same_ptr(a.args[i].exponent, b.args[i].exponent)) {
      return false;
    }
  }
  return same_ptr(a.exponent, b.exponent) && same_ptr(a.step, b.step) &&
         same_ptr(a.length, b.length) && same_ptr(a.lhs, b.lhs) && same_ptr(a.rhs, b.rhs) &&
         same_ptr(a.lower, b.lower) && same_ptr(a.upper, b.upper);
}

ExprPtr parse(std::string_view source) { return Parser(tokenize(source)).parse_all(); }

}  // namespace qpart::dsl
