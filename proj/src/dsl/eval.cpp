#include "qident/dsl/eval.hpp"

#include <algorithm>

#include "qident/error.hpp"

namespace qident::dsl {

namespace {

Monomial inverse(const Monomial& m) {
  if (m.coef.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return Monomial{BigRational(1) / m.coef, -m.ez, -m.ec, -m.eq};
}

struct Factor {
  ExprPtr expr;
  long long count;
};

struct Product {
  Monomial mono;
  std::vector<Factor> num;
  std::vector<Factor> den;
};

void flatten(const ExprPtr& e, bool in_den, long long count, const Env& env, Product& out) {
  if (auto m = eval_monomial(e, env)) {
    Monomial p = m->pow(count);
    out.mono = out.mono * (in_den ? inverse(p) : p);
    return;
  }
  switch (e->kind) {
    case Expr::Kind::Mul:
      flatten(e->lhs, in_den, count, env, out);
      flatten(e->rhs, in_den, count, env, out);
      return;
    case Expr::Kind::Div:
      flatten(e->lhs, in_den, count, env, out);
      flatten(e->rhs, !in_den, count, env, out);
      return;
    case Expr::Kind::Neg:
      if (count % 2 != 0) out.mono.coef = -out.mono.coef;
      flatten(e->lhs, in_den, count, env, out);
      return;
    case Expr::Kind::Pow: {
      long long k = eval_int(e->i1, env);
      if (k == 0) return;
      if (k < 0) flatten(e->lhs, !in_den, -k * count, env, out);
      else flatten(e->lhs, in_den, k * count, env, out);
      return;
    }
    default:
      (in_den ? out.den : out.num).push_back(Factor{e, count});
  }
}

QSeries eval_at(const ExprPtr& e, const Env& env, int order, bool* structural_zero = nullptr);

std::optional<Monomial> poch_argument(const ExprPtr& e, const Env& env) {
  if (e->kind != Expr::Kind::Poch) return std::nullopt;
  auto m = eval_monomial(e->lhs, env);
  if (!m) throw Error(ErrorKind::NotAMonomial, "poch argument " + to_string(e->lhs) + " is not a monomial");
  return m;
}

long long poch_count(const ExprPtr& e, const Env& env) {
  if (!e->i1) return kInfinity;
  long long n = eval_int(e->i1, env);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative Pochhammer count in " + to_string(e));
  return n;
}

void check_specialized(const Monomial& x, Mode mode) {
  if (mode == Mode::Specialized && (x.ez != 0 || x.ec != 0))
    throw Error(ErrorKind::ModeMismatch, "symbolic parameter in specialized evaluation");
}

// Multiplies (or divides) `acc` by Π_{j<count} (1 - x q^{base j}) in place.
void apply_poch(QSeries& acc, const Monomial& x, long long count, int base, bool divide) {
  check_specialized(x, acc.mode());
  if (x.eq < 0) throw Error(ErrorKind::NegativeValuation, "Pochhammer argument with a negative power of q");
  Monomial f = x;
  for (long long j = 0; count == kInfinity || j < count; ++j) {
    if (f.eq > acc.order()) break;
    if (!divide) {
      acc.mul_binomial(f);
    } else if (f.eq >= 1) {
      acc.div_binomial(f);
    } else {
      LaurentPoly c0 = LaurentPoly(1) - f.coefficient_poly();
      if (c0.is_zero()) throw Error(ErrorKind::DivisionByZero, "Pochhammer factor (1 - 1) in a denominator");
      acc = acc.divide(QSeries::constant(c0, acc.order(), acc.mode()));
    }
    f.eq += base;
  }
}

QSeries power(const QSeries& s, long long k) {
  QSeries result = QSeries::constant(LaurentPoly(1), s.order(), s.mode());
  QSeries b = s;
  while (k > 0) {
    if (k & 1) result = result * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return result;
}

// Divides by 1 - x q^k in place when `d` has exactly that shape.
bool divide_if_binomial(QSeries& acc, const QSeries& d) {
  if (!d[0].is_one()) return false;
  int k = -1;
  for (int n = 1; n <= d.order(); ++n) {
    if (d[n].is_zero()) continue;
    if (k != -1 || !d[n].is_monomial()) return false;
    k = n;
  }
  if (k == -1) return true;
  const auto& [e, coef] = d[k].terms()[0];
  acc.div_binomial(Monomial{-coef, e.z, e.c, k});
  return true;
}

QSeries eval_flat(const Product& prod, const Env& env, int N, bool* structural_zero) {
  const Monomial& m = prod.mono;
  check_specialized(m, env.mode);
  if (m.coef.is_zero()) {
    if (structural_zero) *structural_zero = true;
    return QSeries(N, env.mode);
  }

  struct DenSeries {
    const Factor* factor;
    QSeries series;
    int valuation;
  };
  std::vector<DenSeries> general;
  long long V = 0;
  const int probe = static_cast<int>(std::clamp<long long>(N - m.eq, 0, N));
  for (const auto& f : prod.den) {
    if (f.expr->kind == Expr::Kind::Poch) continue;
    int p = probe;
    QSeries s = eval_at(f.expr, env, p);
    while (s.is_zero()) {
      if (p > 4 * N + 256)
        throw Error(ErrorKind::NonInvertibleConstantTerm, "denominator " + to_string(f.expr) + " vanishes");
      p = 2 * p + 16;
      s = eval_at(f.expr, env, p);
    }
    int v = s.valuation();
    V += static_cast<long long>(v) * f.count;
    general.push_back(DenSeries{&f, std::move(s), v});
  }

  const long long shift = m.eq - V;
  if (shift > N) return QSeries(N, env.mode);
  const int M = static_cast<int>(N - shift);

  QSeries acc = QSeries::constant(LaurentPoly(1), M, env.mode);
  bool first = true;
  for (const auto& f : prod.num) {
    if (auto x = poch_argument(f.expr, env)) {
      long long count = poch_count(f.expr, env);
      for (long long r = 0; r < f.count; ++r) apply_poch(acc, *x, count, f.expr->base, false);
      first = false;
      continue;
    }
    QSeries s = eval_at(f.expr, env, M);
    if (f.count != 1) s = power(s, f.count);
    acc = first ? std::move(s) : acc * s;
    first = false;
  }
  for (const auto& f : prod.den) {
    if (auto x = poch_argument(f.expr, env)) {
      long long count = poch_count(f.expr, env);
      for (long long r = 0; r < f.count; ++r) apply_poch(acc, *x, count, f.expr->base, true);
    }
  }
  for (auto& d : general) {
    QSeries s = d.series;
    if (s.order() < M + d.valuation) s = eval_at(d.factor->expr, env, M + d.valuation);
    s = s.with_order(M + d.valuation).shift_down(d.valuation).with_order(M);
    for (long long r = 0; r < d.factor->count; ++r) {
      if (!divide_if_binomial(acc, s)) acc = acc.divide(s);
    }
  }

  Monomial unit{m.coef, m.ez, m.ec, 0};
  if (shift >= 0) {
    QSeries out = acc.with_order(N);
    unit.eq = shift;
    out.mul_monomial(unit);
    return out;
  }
  QSeries out = acc.shift_down(static_cast<int>(-shift)).with_order(N);
  out.mul_monomial(unit);
  return out;
}

bool has_division(const ExprPtr& e) {
  if (!e) return false;
  if (e->kind == Expr::Kind::Div) return true;
  return has_division(e->lhs) || has_division(e->rhs);
}

// Only sums carrying their own quotients can hide a cancellation.
bool is_additive(const ExprPtr& e) {
  return (e->kind == Expr::Kind::Add || e->kind == Expr::Kind::Sub) && has_division(e);
}

// A product whose denominator only cancels against the product as a whole,
// e.g. (1-c)^2 * (-c/(1-c)^2 + ...), is retried term by term over its first
// additive numerator factor.
QSeries eval_distributed(const Product& prod, const Env& env, int N, bool* structural_zero, int depth) {
  try {
    return eval_flat(prod, env, N, structural_zero);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NotDivisible && err.kind() != ErrorKind::NonInvertibleConstantTerm) throw;
    if (depth > 16) throw;
    auto it = std::find_if(prod.num.begin(), prod.num.end(), [](const Factor& f) { return is_additive(f.expr); });
    if (it == prod.num.end()) throw;
    Product rest = prod;
    auto& slot = rest.num[static_cast<std::size_t>(it - prod.num.begin())];
    const ExprPtr sum = slot.expr;
    if (--slot.count == 0) rest.num.erase(rest.num.begin() + (it - prod.num.begin()));
    QSeries total(N, env.mode);
    for (int side = 0; side < 2; ++side) {
      Product part = rest;
      if (side == 1 && sum->kind == Expr::Kind::Sub) part.mono.coef = -part.mono.coef;
      flatten(side == 0 ? sum->lhs : sum->rhs, false, 1, env, part);
      total += eval_distributed(part, env, N, nullptr, depth + 1);
    }
    return total;
  }
}

QSeries eval_product(const ExprPtr& e, const Env& env, int N, bool* structural_zero) {
  Product prod;
  flatten(e, false, 1, env, prod);
  return eval_distributed(prod, env, N, structural_zero, 0);
}

QSeries eval_sum(const ExprPtr& e, const Env& env, int N) {
  Env local = env;
  QSeries total(N, env.mode);
  long long lo = eval_int(e->i1, env);
  if (e->i2) {
    long long hi = eval_int(e->i2, env);
    for (long long k = lo; k <= hi; ++k) {
      local.ints[e->name] = k;
      total += eval_at(e->lhs, local, N);
    }
    return total;
  }
  const long long cap = 100 + 20LL * N;
  int beyond = 0;
  for (long long t = 0;; ++t) {
    if (t >= cap)
      throw Error(ErrorKind::NonConvergent,
                  "sum " + to_string(e) + " did not leave the truncation window after " + std::to_string(cap) + " terms");
    local.ints[e->name] = lo + t;
    bool zero_coef = false;
    QSeries term = eval_at(e->lhs, local, N, &zero_coef);
    if (zero_coef) continue;
    if (term.is_zero()) {
      if (++beyond >= 3) break;
      continue;
    }
    beyond = 0;
    total += term;
  }
  return total;
}

QSeries eval_at(const ExprPtr& e, const Env& env, int N, bool* structural_zero) {
  if (auto m = eval_monomial(e, env)) {
    check_specialized(*m, env.mode);
    if (m->coef.is_zero() && structural_zero) *structural_zero = true;
    if (m->eq < 0 && !m->coef.is_zero())
      throw Error(ErrorKind::NegativeValuation, to_string(e) + " has a negative power of q");
    return QSeries::from_monomial(*m, N, env.mode);
  }
  switch (e->kind) {
    case Expr::Kind::Add: return eval_at(e->lhs, env, N) + eval_at(e->rhs, env, N);
    case Expr::Kind::Sub: return eval_at(e->lhs, env, N) - eval_at(e->rhs, env, N);
    case Expr::Kind::Neg: return -eval_at(e->lhs, env, N, structural_zero);
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
    case Expr::Kind::Pow: return eval_product(e, env, N, structural_zero);
    case Expr::Kind::Poch: {
      auto x = poch_argument(e, env);
      check_specialized(*x, env.mode);
      const long long count = poch_count(e, env);
      if (count != kInfinity || x->eq != 0) return qs_poch(*x, count, e->base, N, env.mode);
      // (x)_inf with q-free x: the first factor is a constant, the rest truncate.
      QSeries out = QSeries::constant(LaurentPoly(1), N, env.mode);
      apply_poch(out, *x, kInfinity, e->base, false);
      return out;
    }
    case Expr::Kind::QBin:
      return qs_qbin(eval_int(e->i1, env), eval_int(e->i2, env), e->base, N, env.mode);
    case Expr::Kind::Sum: return eval_sum(e, env, N);
    default: break;
  }
  throw Error(ErrorKind::InvalidArgument, "cannot evaluate " + to_string(e));
}

}  // namespace

int chi12(long long n) {
  long long r = ((n % 12) + 12) % 12;
  if (r == 1 || r == 11) return 1;
  if (r == 5 || r == 7) return -1;
  return 0;
}

BigRational eval_rational(const IntExprPtr& e, const Env& env) {
  switch (e->kind) {
    case IntExpr::Kind::Num: return e->value;
    case IntExpr::Kind::Var: {
      auto it = env.ints.find(e->name);
      if (it == env.ints.end()) {
        auto p = env.params.find(e->name);
        if (p != env.params.end() && p->second.ez == 0 && p->second.ec == 0 && p->second.eq == 0)
          return p->second.coef;
        throw Error(ErrorKind::UnboundVariable, "unbound index variable '" + e->name + "'");
      }
      return BigRational(it->second);
    }
    case IntExpr::Kind::Neg: return -eval_rational(e->lhs, env);
    case IntExpr::Kind::Add: return eval_rational(e->lhs, env) + eval_rational(e->rhs, env);
    case IntExpr::Kind::Sub: return eval_rational(e->lhs, env) - eval_rational(e->rhs, env);
    case IntExpr::Kind::Mul: return eval_rational(e->lhs, env) * eval_rational(e->rhs, env);
    case IntExpr::Kind::Div: return eval_rational(e->lhs, env) / eval_rational(e->rhs, env);
    case IntExpr::Kind::Pow: {
      BigRational k = eval_rational(e->rhs, env);
      auto ki = k.to_int64();
      if (!ki) throw Error(ErrorKind::NonIntegerIndex, "non-integer exponent in " + to_string(e));
      return eval_rational(e->lhs, env).pow(*ki);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "bad integer expression");
}

long long eval_int(const IntExprPtr& e, const Env& env) {
  BigRational v = eval_rational(e, env);
  auto i = v.to_int64();
  if (!i) throw Error(ErrorKind::NonIntegerIndex, to_string(e) + " evaluates to " + v.to_string());
  return *i;
}

std::optional<Monomial> eval_monomial(const ExprPtr& e, const Env& env) {
  switch (e->kind) {
    case Expr::Kind::Num: return Monomial{e->value};
    case Expr::Kind::Var: {
      if (auto it = env.ints.find(e->name); it != env.ints.end()) return Monomial{BigRational(it->second)};
      if (auto it = env.params.find(e->name); it != env.params.end()) return it->second;
      if (e->name == "q") return Monomial{BigRational(1), 0, 0, 1};
      if (env.mode == Mode::Symbolic && e->name == "z") return Monomial{BigRational(1), 1, 0, 0};
      if (env.mode == Mode::Symbolic && e->name == "c") return Monomial{BigRational(1), 0, 1, 0};
      throw Error(ErrorKind::UnboundVariable, "unbound variable '" + e->name + "'");
    }
    case Expr::Kind::Neg: {
      auto m = eval_monomial(e->lhs, env);
      if (m) m->coef = -m->coef;
      return m;
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      auto a = eval_monomial(e->lhs, env);
      if (!a) return std::nullopt;
      auto b = eval_monomial(e->rhs, env);
      if (!b) return std::nullopt;
      if (e->kind == Expr::Kind::Sub) b->coef = -b->coef;
      if (a->coef.is_zero()) return b;
      if (b->coef.is_zero()) return a;
      if (a->ez != b->ez || a->ec != b->ec || a->eq != b->eq) return std::nullopt;
      a->coef += b->coef;
      if (a->coef.is_zero()) return Monomial{BigRational(0)};
      return a;
    }
    case Expr::Kind::Mul: {
      auto a = eval_monomial(e->lhs, env);
      if (!a) return std::nullopt;
      // n*chi12(n)*q^((n^2-1)/24): the exponent is only integral when chi12(n) != 0.
      if (a->coef.is_zero()) return Monomial{BigRational(0)};
      auto b = eval_monomial(e->rhs, env);
      if (!b) return std::nullopt;
      return *a * *b;
    }
    case Expr::Kind::Div: {
      auto a = eval_monomial(e->lhs, env);
      if (!a) return std::nullopt;
      auto b = eval_monomial(e->rhs, env);
      if (!b) return std::nullopt;
      return *a * inverse(*b);
    }
    case Expr::Kind::Pow: {
      auto a = eval_monomial(e->lhs, env);
      if (!a) return std::nullopt;
      long long k = eval_int(e->i1, env);
      if (a->coef.is_zero()) {
        if (k < 0) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
        return Monomial{BigRational(k == 0 ? 1 : 0)};
      }
      return a->pow(k);
    }
    case Expr::Kind::Chi12: return Monomial{BigRational(chi12(eval_int(e->i1, env)))};
    default: return std::nullopt;
  }
}

QSeries eval(const ExprPtr& e, const Env& env) { return eval_at(e, env, env.order); }

ConvergenceReport check_convergence(const ExprPtr& sum, const Env& env, int terms) {
  if (sum->kind != Expr::Kind::Sum || sum->i2)
    throw Error(ErrorKind::InvalidArgument, "check_convergence expects an infinite sum");
  ConvergenceReport report;
  Env local = env;
  const long long lo = eval_int(sum->i1, env);
  const int cap = 4 * env.order + 256;
  for (int t = 0; t < terms; ++t) {
    local.ints[sum->name] = lo + t;
    std::optional<int> degree;
    for (int p = std::max(env.order, 8); p <= cap; p = 2 * p + 16) {
      QSeries s = eval_at(sum->lhs, local, p);
      if (!s.is_zero()) {
        degree = s.valuation();
        break;
      }
    }
    report.min_degrees.push_back(degree);
  }
  // Judge the tail: past the midpoint each degree must beat the one before.
  bool increasing = report.min_degrees.size() >= 2;
  for (std::size_t i = report.min_degrees.size() / 2 + 1; i < report.min_degrees.size(); ++i) {
    const auto& prev = report.min_degrees[i - 1];
    const auto& cur = report.min_degrees[i];
    if (!prev) continue;
    if (cur && *cur <= *prev) increasing = false;
  }
  report.eventually_increasing = increasing;
  return report;
}

}  // namespace qident::dsl
