#include "qident/dsl/ast.hpp"

namespace qident::dsl {

IntExprPtr IntExpr::num(BigRational v) {
  auto e = std::make_shared<IntExpr>();
  e->kind = Kind::Num;
  e->value = std::move(v);
  return e;
}

IntExprPtr IntExpr::var(std::string name) {
  auto e = std::make_shared<IntExpr>();
  e->kind = Kind::Var;
  e->name = std::move(name);
  return e;
}

IntExprPtr IntExpr::unary(Kind kind, IntExprPtr operand) {
  auto e = std::make_shared<IntExpr>();
  e->kind = kind;
  e->lhs = std::move(operand);
  return e;
}

IntExprPtr IntExpr::binary(Kind kind, IntExprPtr l, IntExprPtr r) {
  auto e = std::make_shared<IntExpr>();
  e->kind = kind;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::num(BigRational v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Num;
  e->value = std::move(v);
  return e;
}

ExprPtr Expr::var(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Var;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::neg(ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr Expr::binary(Kind kind, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::pow(ExprPtr base, IntExprPtr exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->lhs = std::move(base);
  e->i1 = std::move(exponent);
  return e;
}

ExprPtr Expr::poch(ExprPtr arg, IntExprPtr count, int base) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Poch;
  e->lhs = std::move(arg);
  e->i1 = std::move(count);
  e->base = base;
  return e;
}

ExprPtr Expr::qbin(IntExprPtr n, IntExprPtr k, int base) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::QBin;
  e->i1 = std::move(n);
  e->i2 = std::move(k);
  e->base = base;
  return e;
}

ExprPtr Expr::sum(std::string var, IntExprPtr lo, IntExprPtr hi, ExprPtr body) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Sum;
  e->name = std::move(var);
  e->i1 = std::move(lo);
  e->i2 = std::move(hi);
  e->lhs = std::move(body);
  return e;
}

ExprPtr Expr::chi12(IntExprPtr arg) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Chi12;
  e->i1 = std::move(arg);
  return e;
}

bool equal(const IntExprPtr& a, const IntExprPtr& b) {
  if (!a || !b) return !a && !b;
  return a->kind == b->kind && a->value == b->value && a->name == b->name && equal(a->lhs, b->lhs) &&
         equal(a->rhs, b->rhs);
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return a->kind == b->kind && a->value == b->value && a->name == b->name && a->base == b->base &&
         equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs) && equal(a->i1, b->i1) && equal(a->i2, b->i2);
}

namespace {

// Binding strength: sums 1, products 2, prefix minus 3, powers 4, atoms 5.
int precedence(const IntExpr& e) {
  switch (e.kind) {
    case IntExpr::Kind::Add:
    case IntExpr::Kind::Sub: return 1;
    case IntExpr::Kind::Mul:
    case IntExpr::Kind::Div: return 2;
    case IntExpr::Kind::Neg: return 3;
    case IntExpr::Kind::Pow: return 4;
    case IntExpr::Kind::Num: return e.value.sign() < 0 || !e.value.is_integer() ? 0 : 5;
    case IntExpr::Kind::Var: return 5;
  }
  return 0;
}

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Num: return e.value.sign() < 0 || !e.value.is_integer() ? 0 : 5;
    default: return 5;
  }
}

std::string render(const IntExprPtr& e, int min_prec);

// The operand of `^` is a unary form: number, name, signed unary or group.
std::string render_exponent(const IntExprPtr& e) {
  if (e->kind == IntExpr::Kind::Neg) return "-" + render_exponent(e->lhs);
  int p = precedence(*e);
  if (p == 5) return render(e, 5);
  return "(" + render(e, 0) + ")";
}

std::string render(const IntExprPtr& e, int min_prec) {
  std::string out;
  switch (e->kind) {
    case IntExpr::Kind::Num: out = e->value.to_string(); break;
    case IntExpr::Kind::Var: out = e->name; break;
    case IntExpr::Kind::Neg: out = "-" + render(e->lhs, 3); break;
    case IntExpr::Kind::Add: out = render(e->lhs, 1) + " + " + render(e->rhs, 2); break;
    case IntExpr::Kind::Sub: out = render(e->lhs, 1) + " - " + render(e->rhs, 2); break;
    case IntExpr::Kind::Mul: out = render(e->lhs, 2) + "*" + render(e->rhs, 3); break;
    case IntExpr::Kind::Div: out = render(e->lhs, 2) + "/" + render(e->rhs, 3); break;
    case IntExpr::Kind::Pow: out = render(e->lhs, 5) + "^" + render_exponent(e->rhs); break;
  }
  if (precedence(*e) < min_prec) return "(" + out + ")";
  return out;
}

std::string render(const ExprPtr& e, int min_prec) {
  std::string out;
  switch (e->kind) {
    case Expr::Kind::Num: out = e->value.to_string(); break;
    case Expr::Kind::Var: out = e->name; break;
    case Expr::Kind::Neg: out = "-" + render(e->lhs, 3); break;
    case Expr::Kind::Add: out = render(e->lhs, 1) + " + " + render(e->rhs, 2); break;
    case Expr::Kind::Sub: out = render(e->lhs, 1) + " - " + render(e->rhs, 2); break;
    case Expr::Kind::Mul: out = render(e->lhs, 2) + "*" + render(e->rhs, 3); break;
    case Expr::Kind::Div: out = render(e->lhs, 2) + "/" + render(e->rhs, 3); break;
    case Expr::Kind::Pow: out = render(e->lhs, 5) + "^" + render_exponent(e->i1); break;
    case Expr::Kind::Poch:
      out = "poch(" + render(e->lhs, 0) + ", " + (e->i1 ? render(e->i1, 0) : std::string("inf"));
      if (e->base != 1) out += ", q^" + std::to_string(e->base);
      out += ")";
      break;
    case Expr::Kind::QBin:
      out = "qbin(" + render(e->i1, 0) + ", " + render(e->i2, 0);
      if (e->base != 1) out += ", q^" + std::to_string(e->base);
      out += ")";
      break;
    case Expr::Kind::Sum:
      out = "sum(" + e->name + "=" + render(e->i1, 0) + ".." + (e->i2 ? render(e->i2, 0) : std::string("inf")) +
            ", " + render(e->lhs, 0) + ")";
      break;
    case Expr::Kind::Chi12: out = "chi12(" + render(e->i1, 0) + ")"; break;
  }
  if (precedence(*e) < min_prec) return "(" + out + ")";
  return out;
}

}  // namespace

std::string to_string(const IntExprPtr& e) { return e ? render(e, 0) : "inf"; }
std::string to_string(const ExprPtr& e) { return render(e, 0); }

}  // namespace qident::dsl
