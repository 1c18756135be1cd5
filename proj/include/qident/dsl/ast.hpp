#pragma once

#include <memory>
#include <string>

#include "qident/rational.hpp"

namespace qident::dsl {

struct IntExpr;
using IntExprPtr = std::shared_ptr<const IntExpr>;

/// Integer-valued expression over bound variables: exponents, bounds, counts.
struct IntExpr {
  enum class Kind { Num, Var, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Num;
  BigRational value;  // Num
  std::string name;   // Var
  IntExprPtr lhs;     // Neg operand, binary left
  IntExprPtr rhs;     // binary right

  static IntExprPtr num(BigRational v);
  static IntExprPtr var(std::string name);
  static IntExprPtr unary(Kind kind, IntExprPtr operand);
  static IntExprPtr binary(Kind kind, IntExprPtr l, IntExprPtr r);
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Num, Var, Neg, Add, Sub, Mul, Div, Pow, Poch, QBin, Sum, Chi12 };

  Kind kind = Kind::Num;
  BigRational value;  // Num
  std::string name;   // Var; Sum index variable
  ExprPtr lhs;        // Neg/Pow/Poch operand, binary left, Sum body
  ExprPtr rhs;        // binary right
  IntExprPtr i1;      // Pow exponent, Poch count (null = inf), QBin n, Sum lo, Chi12 argument
  IntExprPtr i2;      // QBin k, Sum hi (null = inf)
  int base = 1;       // Poch, QBin

  static ExprPtr num(BigRational v);
  static ExprPtr var(std::string name);
  static ExprPtr neg(ExprPtr operand);
  static ExprPtr binary(Kind kind, ExprPtr l, ExprPtr r);
  static ExprPtr pow(ExprPtr base, IntExprPtr exponent);
  static ExprPtr poch(ExprPtr arg, IntExprPtr count, int base);
  static ExprPtr qbin(IntExprPtr n, IntExprPtr k, int base);
  static ExprPtr sum(std::string var, IntExprPtr lo, IntExprPtr hi, ExprPtr body);
  static ExprPtr chi12(IntExprPtr arg);
};

bool equal(const IntExprPtr& a, const IntExprPtr& b);
bool equal(const ExprPtr& a, const ExprPtr& b);

/// Renders with the minimal parentheses that parse back to the same tree.
std::string to_string(const IntExprPtr& e);
std::string to_string(const ExprPtr& e);

}  // namespace qident::dsl
