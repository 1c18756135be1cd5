#include "qident/qseries.hpp"

#include <algorithm>
#include <climits>

#include "qident/error.hpp"

namespace qident {

namespace {

std::int32_t exp32(long long v) {
  if (v < INT32_MIN || v > INT32_MAX) throw Error(ErrorKind::ExponentOverflow, "exponent out of 32-bit range");
  return static_cast<std::int32_t>(v);
}

std::string render_coefficient(const LaurentPoly& p, int power) {
  std::string q;
  if (power == 1) q = "q";
  else if (power > 1) q = "q^" + std::to_string(power);
  if (q.empty()) return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
  if (p.is_one()) return q;
  if (p == LaurentPoly(-1)) return "-" + q;
  if (p.is_monomial()) return p.to_string() + "*" + q;
  return "(" + p.to_string() + ")*" + q;
}

}  // namespace

const char* mode_name(Mode mode) { return mode == Mode::Symbolic ? "symbolic" : "specialize"; }

Monomial Monomial::operator*(const Monomial& o) const {
  return {coef * o.coef, exp32(static_cast<long long>(ez) + o.ez), exp32(static_cast<long long>(ec) + o.ec),
          eq + o.eq};
}

Monomial Monomial::pow(long long k) const {
  return {coef.pow(k), exp32(static_cast<long long>(ez) * k), exp32(static_cast<long long>(ec) * k), eq * k};
}

QSeries::QSeries(int order, Mode mode) : mode_(mode) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries QSeries::constant(LaurentPoly value, int order, Mode mode) {
  QSeries s(order, mode);
  s.set(0, std::move(value));
  return s;
}

QSeries QSeries::from_monomial(const Monomial& m, int order, Mode mode) {
  QSeries s(order, mode);
  if (m.eq < 0) throw Error(ErrorKind::NegativeValuation, "monomial with a negative power of q");
  if (m.eq <= order) s.set(static_cast<int>(m.eq), m.coefficient_poly());
  return s;
}

void QSeries::set(int n, LaurentPoly value) {
  if (mode_ == Mode::Specialized && !value.is_constant())
    throw Error(ErrorKind::ModeMismatch, "specialized series cannot hold " + value.to_string());
  coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

int QSeries::valuation() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!coeffs_[n].is_zero()) return static_cast<int>(n);
  }
  return order() + 1;
}

void QSeries::check_compatible(const QSeries& rhs) const {
  if (mode_ != rhs.mode_) throw Error(ErrorKind::ModeMismatch, "mixing symbolic and specialized series");
  if (order() != rhs.order())
    throw Error(ErrorKind::OrderMismatch,
                "series orders differ (" + std::to_string(order()) + " vs " + std::to_string(rhs.order()) + ")");
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!rhs.coeffs_[n].is_zero()) coeffs_[n] += rhs.coeffs_[n];
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  check_compatible(rhs);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!rhs.coeffs_[n].is_zero()) coeffs_[n] -= rhs.coeffs_[n];
  }
  return *this;
}

QSeries& QSeries::operator*=(const LaurentPoly& scalar) {
  if (mode_ == Mode::Specialized && !scalar.is_constant())
    throw Error(ErrorKind::ModeMismatch, "specialized series scaled by " + scalar.to_string());
  for (auto& c : coeffs_) {
    if (!c.is_zero()) c = c * scalar;
  }
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.check_compatible(b);
  const int N = a.order();
  std::vector<int> nza;
  std::vector<int> nzb;
  for (int i = 0; i <= N; ++i) {
    if (!a[i].is_zero()) nza.push_back(i);
    if (!b[i].is_zero()) nzb.push_back(i);
  }
  QSeries out(N, a.mode_);
  if (a.mode_ == Mode::Specialized) {
    std::vector<BigRational> acc(static_cast<std::size_t>(N) + 1);
    for (int i : nza) {
      const BigRational x = a[i].constant_term();
      for (int j : nzb) {
        if (i + j > N) break;
        acc[static_cast<std::size_t>(i + j)] += x * b[j].constant_term();
      }
    }
    for (int n = 0; n <= N; ++n) out.coeffs_[static_cast<std::size_t>(n)] = LaurentPoly(std::move(acc[static_cast<std::size_t>(n)]));
    return out;
  }
  for (int i : nza) {
    const LaurentPoly& x = a[i];
    for (int j : nzb) {
      if (i + j > N) break;
      const LaurentPoly& y = b[j];
      LaurentPoly& dst = out.coeffs_[static_cast<std::size_t>(i + j)];
      if (x.is_monomial()) {
        dst.add_scaled(y, x.terms()[0].second, x.terms()[0].first);
      } else if (y.is_monomial()) {
        dst.add_scaled(x, y.terms()[0].second, y.terms()[0].first);
      } else {
        dst += x * y;
      }
    }
  }
  return out;
}

QSeries& QSeries::mul_monomial(const Monomial& m) {
  if (m.eq < 0) throw Error(ErrorKind::NegativeValuation, "monomial with a negative power of q");
  if (mode_ == Mode::Specialized && (m.ez != 0 || m.ec != 0))
    throw Error(ErrorKind::ModeMismatch, "symbolic monomial in a specialized series");
  const int N = order();
  const long long k = m.eq;
  for (int n = N; n >= 0; --n) {
    auto& dst = coeffs_[static_cast<std::size_t>(n)];
    if (n - k < 0) {
      dst = LaurentPoly();
    } else {
      const auto& src = coeffs_[static_cast<std::size_t>(n - k)];
      dst = src.shifted(m.coef, Exponent{m.ez, m.ec});
    }
  }
  return *this;
}

QSeries& QSeries::mul_binomial(const Monomial& x) {
  if (x.eq < 0) throw Error(ErrorKind::NegativeValuation, "monomial with a negative power of q");
  if (mode_ == Mode::Specialized && (x.ez != 0 || x.ec != 0))
    throw Error(ErrorKind::ModeMismatch, "symbolic monomial in a specialized series");
  if (x.is_zero()) return *this;
  const int N = order();
  const BigRational neg = -x.coef;
  const Exponent shift{x.ez, x.ec};
  if (x.eq == 0) {
    for (auto& c : coeffs_) {
      if (!c.is_zero()) c.add_scaled(LaurentPoly(c), neg, shift);
    }
    return *this;
  }
  const int k = static_cast<int>(std::min<std::int64_t>(x.eq, INT_MAX));
  for (int n = N; n >= k; --n) {
    const auto& src = coeffs_[static_cast<std::size_t>(n - k)];
    if (!src.is_zero()) coeffs_[static_cast<std::size_t>(n)].add_scaled(src, neg, shift);
  }
  return *this;
}

QSeries& QSeries::div_binomial(const Monomial& x) {
  if (x.eq < 1) throw Error(ErrorKind::InvalidArgument, "div_binomial needs a positive power of q");
  if (mode_ == Mode::Specialized && (x.ez != 0 || x.ec != 0))
    throw Error(ErrorKind::ModeMismatch, "symbolic monomial in a specialized series");
  if (x.is_zero()) return *this;
  const int N = order();
  if (x.eq > N) return *this;
  const int k = static_cast<int>(x.eq);
  const Exponent shift{x.ez, x.ec};
  for (int n = k; n <= N; ++n) {
    const auto& src = coeffs_[static_cast<std::size_t>(n - k)];
    if (!src.is_zero()) coeffs_[static_cast<std::size_t>(n)].add_scaled(src, x.coef, shift);
  }
  return *this;
}

QSeries QSeries::inverse() const {
  const LaurentPoly& a0 = coeffs_[0];
  const bool ok = mode_ == Mode::Specialized ? !a0.is_zero() : a0.is_monomial();
  if (!ok)
    throw Error(ErrorKind::NonInvertibleConstantTerm, "constant term " + a0.to_string() + " is not invertible");
  return QSeries::constant(LaurentPoly(1), order(), mode_).divide(*this);
}

QSeries QSeries::divide(const QSeries& b) const {
  check_compatible(b);
  const int N = order();
  const LaurentPoly& b0 = b[0];
  if (b0.is_zero())
    throw Error(ErrorKind::NonInvertibleConstantTerm, "divisor has zero constant term");
  std::vector<int> nzb;
  for (int i = 1; i <= N; ++i) {
    if (!b[i].is_zero()) nzb.push_back(i);
  }
  QSeries out(N, mode_);
  if (mode_ == Mode::Specialized) {
    const BigRational inv = BigRational(1) / b0.constant_term();
    std::vector<BigRational> q(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
      BigRational acc = coeffs_[static_cast<std::size_t>(n)].constant_term();
      for (int i : nzb) {
        if (i > n) break;
        const auto& prev = q[static_cast<std::size_t>(n - i)];
        if (!prev.is_zero()) acc -= b[i].constant_term() * prev;
      }
      q[static_cast<std::size_t>(n)] = acc * inv;
    }
    for (int n = 0; n <= N; ++n) out.coeffs_[static_cast<std::size_t>(n)] = LaurentPoly(std::move(q[static_cast<std::size_t>(n)]));
    return out;
  }
  const bool unit = b0.is_monomial();
  BigRational inv_coef;
  Exponent inv_shift;
  if (unit) {
    inv_coef = BigRational(1) / b0.terms()[0].second;
    inv_shift = Exponent{-b0.terms()[0].first.z, -b0.terms()[0].first.c};
  }
  for (int n = 0; n <= N; ++n) {
    LaurentPoly acc = coeffs_[static_cast<std::size_t>(n)];
    for (int i : nzb) {
      if (i > n) break;
      const auto& prev = out.coeffs_[static_cast<std::size_t>(n - i)];
      if (prev.is_zero()) continue;
      const auto& bi = b[i];
      if (bi.is_monomial()) acc.add_scaled(prev, -bi.terms()[0].second, bi.terms()[0].first);
      else acc -= bi * prev;
    }
    if (unit) {
      out.coeffs_[static_cast<std::size_t>(n)] = acc.shifted(inv_coef, inv_shift);
    } else {
      try {
        out.coeffs_[static_cast<std::size_t>(n)] = acc.exact_div(b0);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotDivisible) throw;
        throw Error(ErrorKind::NotDivisible,
                    "at q^" + std::to_string(n) + ": " + std::string(e.what()));
      }
    }
  }
  return out;
}

QSeries QSeries::scalar_exact_div(const LaurentPoly& p) const {
  if (mode_ != Mode::Symbolic && !p.is_constant())
    throw Error(ErrorKind::ModeMismatch, "exact division of a specialized series by " + p.to_string());
  QSeries out(order(), mode_);
  for (int n = 0; n <= order(); ++n) {
    try {
      out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)].exact_div(p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotDivisible) throw;
      throw Error(ErrorKind::NotDivisible, "at q^" + std::to_string(n) + ": " + std::string(e.what()));
    }
  }
  return out;
}

QSeries QSeries::shift_down(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative shift");
  QSeries out(order(), mode_);
  for (int n = 0; n < k && n <= order(); ++n) {
    if (!coeffs_[static_cast<std::size_t>(n)].is_zero())
      throw Error(ErrorKind::NegativeValuation, "series has a nonzero q^" + std::to_string(n) + " term");
  }
  for (int n = k; n <= order(); ++n) out.coeffs_[static_cast<std::size_t>(n - k)] = coeffs_[static_cast<std::size_t>(n)];
  return out;
}

QSeries QSeries::truncated(int new_order) const {
  if (new_order > order()) throw Error(ErrorKind::OrderMismatch, "cannot extend a truncated series");
  return with_order(new_order);
}

QSeries QSeries::with_order(int new_order) const {
  QSeries out(new_order, mode_);
  for (int n = 0; n <= std::min(new_order, order()); ++n) out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)];
  return out;
}

QSeries QSeries::specialize(const BigRational& z0, const BigRational& c0) const {
  QSeries out(order(), Mode::Specialized);
  for (int n = 0; n <= order(); ++n) out.coeffs_[static_cast<std::size_t>(n)] = LaurentPoly(coeffs_[static_cast<std::size_t>(n)].eval(z0, c0));
  return out;
}

std::string QSeries::to_string() const {
  std::string out;
  for (int n = 0; n <= order(); ++n) {
    const auto& c = coeffs_[static_cast<std::size_t>(n)];
    if (c.is_zero()) continue;
    std::string piece = render_coefficient(c, n);
    if (out.empty()) out = piece;
    else if (piece[0] == '-') out += " - " + piece.substr(1);
    else out += " + " + piece;
  }
  return out.empty() ? "0" : out;
}

QSeries qs_poch(const Monomial& x, long long count, int base, int order, Mode mode) {
  if (base < 1) throw Error(ErrorKind::InvalidArgument, "Pochhammer base must be positive");
  if (x.eq < 0) throw Error(ErrorKind::NegativeValuation, "Pochhammer argument with a negative power of q");
  QSeries out = QSeries::constant(LaurentPoly(1), order, mode);
  if (count == kInfinity) {
    if (x.eq == 0 && !x.is_zero())
      throw Error(ErrorKind::NonTruncatingInfiniteProduct, "infinite product whose argument has no positive power of q");
  } else if (count < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative Pochhammer count");
  }
  Monomial factor = x;
  for (long long j = 0; count == kInfinity || j < count; ++j) {
    if (factor.eq > order) break;
    out.mul_binomial(factor);
    factor.eq += base;
  }
  return out;
}

QSeries qs_qbin(long long n, long long k, int base, int order, Mode mode) {
  if (base < 1) throw Error(ErrorKind::InvalidArgument, "q-binomial base must be positive");
  if (n < 0 || k < 0 || k > n) return QSeries(order, mode);
  k = std::min(k, n - k);
  // row[j] holds [i over j]; updated in place from the highest j down.
  std::vector<QSeries> row(static_cast<std::size_t>(k) + 1, QSeries(order, mode));
  row[0] = QSeries::constant(LaurentPoly(1), order, mode);
  for (long long i = 1; i <= n; ++i) {
    for (long long j = std::min(i, k); j >= 1; --j) {
      QSeries shifted = row[static_cast<std::size_t>(j - 1)];
      shifted.mul_monomial(Monomial{BigRational(1), 0, 0, static_cast<std::int64_t>(base) * (i - j)});
      row[static_cast<std::size_t>(j)] += shifted;
    }
  }
  return row[static_cast<std::size_t>(k)];
}

Reindexed qs_reindex(const QSeries& a, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "reindex factor must be positive");
  QSeries out(a.order(), a.mode());
  std::optional<std::string> warning;
  for (int j = 0; j <= a.order(); ++j) {
    if (a[j].is_zero()) continue;
    long long target = static_cast<long long>(j) * m;
    if (target > a.order()) {
      if (!warning)
        warning = "source degree " + std::to_string(j) + " maps beyond order " + std::to_string(a.order());
      continue;
    }
    out.set(static_cast<int>(target), a[j]);
  }
  return {std::move(out), std::move(warning)};
}

}  // namespace qident
