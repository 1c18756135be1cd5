#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qident/dsl/ast.hpp"
#include "qident/qseries.hpp"

namespace qident::dsl {

/// Bindings for evaluation. `z` and `c` stay symbolic in symbolic mode unless
/// bound in `params`; bound summation indices live in `ints`.
struct Env {
  int order = 40;
  Mode mode = Mode::Symbolic;
  std::map<std::string, Monomial> params;
  std::map<std::string, long long> ints;
};

QSeries eval(const ExprPtr& e, const Env& env);

/// Exact value of an integer expression; throws NonIntegerIndex if fractional.
long long eval_int(const IntExprPtr& e, const Env& env);
BigRational eval_rational(const IntExprPtr& e, const Env& env);

/// The expression as a single monomial, when it is one.
std::optional<Monomial> eval_monomial(const ExprPtr& e, const Env& env);

/// Kronecker symbol (12/n).
int chi12(long long n);

struct ConvergenceReport {
  /// Minimum q-degree of each of the first terms; nullopt when the term
  /// vanishes below the probe order.
  std::vector<std::optional<int>> min_degrees;
  bool eventually_increasing = false;
};

ConvergenceReport check_convergence(const ExprPtr& sum, const Env& env, int terms = 12);

}  // namespace qident::dsl
