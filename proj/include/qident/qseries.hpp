#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qident/laurent_poly.hpp"
#include "qident/rational.hpp"

namespace qident {

enum class Mode { Symbolic, Specialized };

const char* mode_name(Mode mode);

/// coef * z^ez * c^ec * q^eq.
struct Monomial {
  BigRational coef{1};
  std::int32_t ez = 0;
  std::int32_t ec = 0;
  std::int64_t eq = 0;

  LaurentPoly coefficient_poly() const { return LaurentPoly::monomial(coef, ez, ec); }
  Monomial operator*(const Monomial& o) const;
  Monomial pow(long long k) const;
  bool is_zero() const { return coef.is_zero(); }
};

/// Truncated power series c[0] + c[1] q + ... + c[N] q^N.
///
/// Specialized series hold constant polynomials only.
class QSeries {
 public:
  QSeries(int order, Mode mode);

  static QSeries constant(LaurentPoly value, int order, Mode mode);
  static QSeries from_monomial(const Monomial& m, int order, Mode mode);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Mode mode() const { return mode_; }

  const LaurentPoly& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  void set(int n, LaurentPoly value);
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or order()+1 for zero.
  int valuation() const;
  bool is_zero() const { return valuation() > order(); }

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const QSeries& rhs) { return *this = *this * rhs; }
  QSeries& operator*=(const LaurentPoly& scalar);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.mode_ == b.mode_ && a.coeffs_ == b.coeffs_;
  }

  /// *this *= m, dropping terms beyond the order.
  QSeries& mul_monomial(const Monomial& m);
  /// *this *= (1 - x).
  QSeries& mul_binomial(const Monomial& x);
  /// *this /= (1 - x); requires x.eq >= 1.
  QSeries& div_binomial(const Monomial& x);

  QSeries inverse() const;
  /// Series quotient; a non-monomial constant term of `b` is divided exactly.
  QSeries divide(const QSeries& b) const;
  QSeries scalar_exact_div(const LaurentPoly& p) const;

  /// Multiplies by q^-k; the first k coefficients must be zero.
  QSeries shift_down(int k) const;
  QSeries truncated(int order) const;
  QSeries with_order(int order) const;
  QSeries specialize(const BigRational& z0, const BigRational& c0) const;

  std::string to_string() const;

 private:
  void check_compatible(const QSeries& rhs) const;

  Mode mode_;
  std::vector<LaurentPoly> coeffs_;
};

inline constexpr long long kInfinity = -1;

/// Π_{j<count} (1 - x q^{base j}); count = kInfinity runs to the truncation.
QSeries qs_poch(const Monomial& x, long long count, int base, int order, Mode mode);

/// Gaussian binomial [n over k] in q^base.
QSeries qs_qbin(long long n, long long k, int base, int order, Mode mode);

struct Reindexed {
  QSeries series;
  std::optional<std::string> warning;
};

/// Substitutes q -> q^m.
Reindexed qs_reindex(const QSeries& a, int m);

}  // namespace qident
