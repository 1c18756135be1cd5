#include "qident/dsl/parser.hpp"

#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "qident/error.hpp"

namespace qident::dsl {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Equals, DotDot, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::DotDot: return "'..'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  };
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    Token t{Tok::End, "", line, col};
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      t.kind = Tok::Number;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      t.kind = Tok::Ident;
    } else if (ch == '.' && i + 1 < src.size() && src[i + 1] == '.') {
      i += 2;
      t.kind = Tok::DotDot;
    } else {
      switch (ch) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        case '=': t.kind = Tok::Equals; break;
        default: fail(std::string("unexpected character '") + ch + "'");
      }
      ++i;
    }
    t.text = std::string(src.substr(start, i - start));
    col += static_cast<int>(i - start);
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    expect(Tok::End);
    return e;
  }

  IntExprPtr parse_int_all() {
    IntExprPtr e = iexpr();
    expect(Tok::End);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view name) const { return at(Tok::Ident) && peek().text == name; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": expected ";
    bool first = true;
    if (expected.size() > 1) msg += "one of ";
    for (const auto& e : expected) {
      if (!first) msg += ", ";
      msg += e;
      first = false;
    }
    msg += ", found " + (t.kind == Tok::End ? describe(Tok::End) : "'" + t.text + "'");
    throw Error(ErrorKind::SyntaxError, msg);
  }

  Token expect(Tok k) {
    if (!at(k)) fail({describe(k)});
    return toks_[pos_++];
  }

  void expect_ident(std::string_view name) {
    if (!at_ident(name)) fail({"'" + std::string(name) + "'"});
    ++pos_;
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      auto kind = toks_[pos_++].kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      lhs = Expr::binary(kind, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (at(Tok::Star) || at(Tok::Slash)) {
      auto kind = toks_[pos_++].kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div;
      lhs = Expr::binary(kind, lhs, factor());
    }
    return lhs;
  }

  ExprPtr factor() {
    if (accept(Tok::Minus)) return Expr::neg(factor());
    ExprPtr a = atom();
    if (accept(Tok::Caret)) return Expr::pow(a, iunary());
    return a;
  }

  int base_suffix() {
    if (!accept(Tok::Comma)) return 1;
    expect_ident("q");
    expect(Tok::Caret);
    Token n = expect(Tok::Number);
    int base = std::stoi(n.text);
    if (base < 1) throw Error(ErrorKind::SyntaxError, "line " + std::to_string(n.line) + ", column " +
                                                         std::to_string(n.column) + ": base must be positive");
    return base;
  }

  ExprPtr atom() {
    if (at(Tok::Number)) return Expr::num(BigRational::parse(toks_[pos_++].text));
    if (accept(Tok::LParen)) {
      ExprPtr e = expr();
      expect(Tok::RParen);
      return e;
    }
    if (!at(Tok::Ident)) fail({"number", "identifier", "'('", "'-'"});
    const std::string name = peek().text;
    const bool call = toks_[pos_ + 1].kind == Tok::LParen;
    if (name == "poch" && call) {
      pos_ += 2;
      ExprPtr arg = expr();
      expect(Tok::Comma);
      IntExprPtr count = bound_or_inf();
      int base = base_suffix();
      expect(Tok::RParen);
      return Expr::poch(arg, count, base);
    }
    if (name == "qbin" && call) {
      pos_ += 2;
      IntExprPtr n = iexpr();
      expect(Tok::Comma);
      IntExprPtr k = iexpr();
      int base = base_suffix();
      expect(Tok::RParen);
      return Expr::qbin(n, k, base);
    }
    if (name == "sum" && call) {
      pos_ += 2;
      std::string var = expect(Tok::Ident).text;
      expect(Tok::Equals);
      IntExprPtr lo = iexpr();
      expect(Tok::DotDot);
      IntExprPtr hi = bound_or_inf();
      expect(Tok::Comma);
      ExprPtr body = expr();
      expect(Tok::RParen);
      return Expr::sum(var, lo, hi, body);
    }
    if (name == "chi12" && call) {
      pos_ += 2;
      IntExprPtr arg = iexpr();
      expect(Tok::RParen);
      return Expr::chi12(arg);
    }
    if (name == "inf" || name == "poch" || name == "qbin" || name == "sum" || name == "chi12")
      fail({"number", "identifier", "'('"});
    ++pos_;
    return Expr::var(name);
  }

  IntExprPtr bound_or_inf() {
    if (at_ident("inf")) {
      ++pos_;
      return nullptr;
    }
    return iexpr();
  }

  IntExprPtr iexpr() {
    IntExprPtr lhs = iterm();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      auto kind = toks_[pos_++].kind == Tok::Plus ? IntExpr::Kind::Add : IntExpr::Kind::Sub;
      lhs = IntExpr::binary(kind, lhs, iterm());
    }
    return lhs;
  }

  IntExprPtr iterm() {
    IntExprPtr lhs = ifactor();
    while (at(Tok::Star) || at(Tok::Slash)) {
      auto kind = toks_[pos_++].kind == Tok::Star ? IntExpr::Kind::Mul : IntExpr::Kind::Div;
      lhs = IntExpr::binary(kind, lhs, ifactor());
    }
    return lhs;
  }

  IntExprPtr ifactor() {
    if (accept(Tok::Minus)) return IntExpr::unary(IntExpr::Kind::Neg, ifactor());
    IntExprPtr a = iatom();
    if (accept(Tok::Caret)) return IntExpr::binary(IntExpr::Kind::Pow, a, iunary());
    return a;
  }

  IntExprPtr iunary() {
    if (accept(Tok::Minus)) return IntExpr::unary(IntExpr::Kind::Neg, iunary());
    return iatom();
  }

  IntExprPtr iatom() {
    if (at(Tok::Number)) return IntExpr::num(BigRational::parse(toks_[pos_++].text));
    if (accept(Tok::LParen)) {
      IntExprPtr e = iexpr();
      expect(Tok::RParen);
      return e;
    }
    if (at(Tok::Ident) && peek().text != "inf") return IntExpr::var(toks_[pos_++].text);
    fail({"number", "identifier", "'('", "'-'"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

IntExprPtr parse_int_expr(std::string_view text) { return Parser(text).parse_int_all(); }

}  // namespace qident::dsl
