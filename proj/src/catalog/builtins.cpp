#include "qident/catalog/builtins.hpp"

#include <functional>
#include <utility>

#include "qident/dsl/eval.hpp"
#include "qident/dsl/parser.hpp"
#include "qident/error.hpp"

namespace qident::catalog {

namespace {

using Args = std::map<std::string, Monomial>;
using Builder = std::function<QSeries(const Args&, int, Mode)>;

Monomial arg(const Args& args, const std::string& name) {
  auto it = args.find(name);
  return it == args.end() ? Monomial{BigRational(0)} : it->second;
}

Monomial qpow(long long e, BigRational coef = BigRational(1)) { return Monomial{std::move(coef), 0, 0, e}; }

Monomial inverse(const Monomial& m) {
  if (m.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of a zero parameter");
  return Monomial{BigRational(1) / m.coef, -m.ez, -m.ec, -m.eq};
}

QSeries to_mode(const QSeries& s, Mode mode) {
  if (s.mode() == mode) return s;
  if (mode == Mode::Symbolic) {
    QSeries out(s.order(), Mode::Symbolic);
    for (int n = 0; n <= s.order(); ++n) out.set(n, s[n]);
    return out;
  }
  for (int n = 0; n <= s.order(); ++n)
    if (!s[n].is_constant()) throw Error(ErrorKind::ModeMismatch, "builtin result still depends on z or c");
  return s.specialize(BigRational(0), BigRational(0));
}

QSeries rank_gf_bilateral(const Args& args, int order, Mode mode) {
  const Monomial z = arg(args, "z");
  if (z.eq != 0) throw Error(ErrorKind::InvalidArgument, "B_RANK_GF_BILATERAL needs z free of q");
  if (mode == Mode::Specialized && (z.coef.is_zero() || z.coef.is_one()))
    throw Error(ErrorKind::ZeroAtPole, "B_RANK_GF_BILATERAL needs z outside {0, 1}");
  const Monomial zinv = inverse(z);
  // The n = 0 term (1-z)/(1-z) is 1.
  QSeries sum = QSeries::from_monomial(qpow(0), order, mode);
  for (long long n = 1; n * (3 * n + 1) / 2 <= order; ++n) {
    QSeries t = QSeries::from_monomial(qpow(n * (3 * n + 1) / 2, BigRational(n % 2 ? -1 : 1)), order, mode);
    t.mul_binomial(z);
    t.div_binomial(z * qpow(n));
    sum += t;
  }
  // n = -k: 1/(1 - z q^-k) = -z^-1 q^k / (1 - z^-1 q^k).
  for (long long k = 1; k * (3 * k - 1) / 2 + k <= order; ++k) {
    QSeries t = QSeries::from_monomial(zinv * qpow(k * (3 * k - 1) / 2 + k, BigRational(k % 2 ? 1 : -1)), order, mode);
    t.mul_binomial(z);
    t.div_binomial(zinv * qpow(k));
    sum += t;
  }
  return sum.divide(qs_poch(qpow(1), kInfinity, 1, order, mode));
}

QSeries rank_gf_positive(const Args& args, int order, Mode mode) {
  const Monomial z = arg(args, "z");
  if (z.eq != 0) throw Error(ErrorKind::InvalidArgument, "B_RANK_GF_POSITIVE needs z free of q");
  const Monomial zinv = inverse(z);
  QSeries sum(order, mode);
  for (long long n = 0; n * n <= order; ++n) {
    QSeries t = QSeries::from_monomial(qpow(n * n), order, mode);
    for (long long j = 1; j <= n; ++j) {
      t.div_binomial(z * qpow(j));
      t.div_binomial(zinv * qpow(j));
    }
    sum += t;
  }
  return sum;
}

QSeries n2_series(const Args&, int order, Mode mode) {
  QSeries sum(order, mode);
  for (long long n = 1; n * (3 * n + 1) / 2 <= order; ++n) {
    QSeries t = QSeries::from_monomial(qpow(n * (3 * n + 1) / 2, BigRational(n % 2 ? -1 : 1)), order, mode);
    t.mul_binomial(qpow(n, BigRational(-1)));
    t.div_binomial(qpow(n));
    t.div_binomial(qpow(n));
    sum += t;
  }
  return sum.divide(qs_poch(qpow(1), kInfinity, 1, order, mode));
}

// F(a, b; t) = Σ_m (aq)_m / (bq)_m t^m.
QSeries fine_f(const Args& args, int order, Mode mode) {
  const Monomial a = arg(args, "a"), b = arg(args, "b"), t = arg(args, "t");
  if (a.eq < 0 || b.eq < 0) throw Error(ErrorKind::NegativeValuation, "B_FINE_F needs a, b without negative powers of q");
  if (t.is_zero()) return QSeries::from_monomial(qpow(0), order, mode);
  if (t.eq < 1) throw Error(ErrorKind::NonConvergent, "B_FINE_F needs t divisible by q");
  QSeries term = QSeries::from_monomial(qpow(0), order, mode);
  QSeries sum = term;
  for (long long m = 1; m * t.eq <= order; ++m) {
    term.mul_binomial(a * qpow(m));
    term.div_binomial(b * qpow(m));
    term.mul_monomial(t);
    sum += term;
  }
  return sum;
}

QSeries zagier_h(const Args&, int order, Mode mode) {
  QSeries sum(order, mode);
  for (long long n = 1; (n * n - 1) / 24 <= order; ++n) {
    const int chi = dsl::chi12(n);
    if (chi != 0) sum += QSeries::from_monomial(qpow((n * n - 1) / 24, BigRational(n * chi)), order, mode);
  }
  return sum;
}

QSeries limit_c1(const Args&, int order, Mode mode) {
  // Numerator over the common denominator (1-c)^2.
  static const dsl::ExprPtr numerator = dsl::parse(
      "(1-c)^2*(-c/(1-c)^2 + poch(q,inf)/poch(c,inf)*(c/(1-c) + "
      "sum(n=1..inf, poch(c*q,n)/poch(q,n)*q^n/(1-q^n))))");
  dsl::Env env;
  env.order = order;
  env.mode = Mode::Symbolic;
  const QSeries num = dsl::eval(numerator, env);
  const LaurentPoly one_minus_c_sq = (LaurentPoly(1) - LaurentPoly::variable(Var::C)).pow(2);
  QSeries out(order, mode);
  for (int n = 0; n <= order; ++n)
    out.set(n, LaurentPoly(num[n].exact_div(one_minus_c_sq).substitute(Var::C, BigRational(1))));
  return out;
}

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> builders = {
      {"B_RANK_GF_BILATERAL", rank_gf_bilateral},
      {"B_RANK_GF_POSITIVE", rank_gf_positive},
      {"B_N2_SERIES", n2_series},
      {"B_FINE_F", fine_f},
      {"B_ZAGIER_H", zagier_h},
      {"B_LIMIT_C1", limit_c1},
  };
  return builders;
}

}  // namespace

QSeries builtin_builder(const std::string& name, const std::map<std::string, Monomial>& args, int order, Mode mode) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  for (const auto& [id, build] : registry())
    if (id == name) return to_mode(build(args, order, mode), mode);
  throw Error(ErrorKind::UnknownBuiltin, "unknown builtin '" + name + "'");
}

bool has_builtin(const std::string& name) {
  for (const auto& entry : registry())
    if (entry.first == name) return true;
  return false;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

}  // namespace qident::catalog
