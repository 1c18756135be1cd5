#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qident/rational.hpp"

namespace qident {

struct Exponent {
  std::int32_t z = 0;
  std::int32_t c = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Adds exponents, throwing ExponentOverflow outside the 32-bit range.
Exponent add_exponents(Exponent a, Exponent b);

enum class Var { Z, C };

/// Sparse Laurent polynomial in z and c with rational coefficients.
///
/// Terms are kept sorted by (e_z, e_c) ascending with no zero coefficients,
/// so two polynomials are equal exactly when their term vectors are.
class LaurentPoly {
 public:
  using Term = std::pair<Exponent, BigRational>;

  LaurentPoly() = default;
  LaurentPoly(BigRational constant);  // NOLINT(implicit)
  LaurentPoly(long long constant) : LaurentPoly(BigRational(constant)) {}  // NOLINT(implicit)

  static LaurentPoly monomial(BigRational coef, std::int32_t ez, std::int32_t ec);
  static LaurentPoly variable(Var v) { return v == Var::Z ? monomial(1, 1, 0) : monomial(1, 0, 1); }

  /// Builds from arbitrary terms; sorts, merges duplicates, drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;

  BigRational coefficient(Exponent e) const;
  BigRational constant_term() const { return coefficient({0, 0}); }

  // Exponent bounds; all are 0 for the zero polynomial.
  std::int32_t min_exp(Var v) const;
  std::int32_t max_exp(Var v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const BigRational& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigRational& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// this += coef * z^ez c^ec * p, in one merge pass.
  void add_scaled(const LaurentPoly& p, const BigRational& coef, Exponent shift);

  LaurentPoly shifted(const BigRational& coef, Exponent shift) const;
  LaurentPoly pow(unsigned exponent) const;

  /// Quotient q with *this == b * q; throws NotDivisible if none exists.
  LaurentPoly exact_div(const LaurentPoly& b) const;

  BigRational eval(const BigRational& z0, const BigRational& c0) const;
  LaurentPoly substitute(Var v, const BigRational& value) const;

  /// Canonical rendering in graded-lex order, e.g. `z^2 + z*c + c^2`.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Σ_{i<s} z^i c^{s-1-i}.
LaurentPoly geometric_weight(int s);

}  // namespace qident
