#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qident {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in 64 bits are stored
/// inline; anything larger is promoted to a GMP rational and demoted again
/// as soon as a result fits. Almost every coefficient that occurs in q-series
/// work is a small integer, so the inline path carries nearly all the load.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long long value) : num_(value) {}  // NOLINT(implicit)
  BigRational(long long num, long long den);
  explicit BigRational(const mpq_class& value);

  BigRational(const BigRational& other);
  BigRational(BigRational&&) noexcept = default;
  BigRational& operator=(const BigRational& other);
  BigRational& operator=(BigRational&&) noexcept = default;
  ~BigRational() = default;

  /// Parses "p", "-p" or "p/q" (whitespace around tokens allowed).
  static BigRational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  std::optional<long long> to_int64() const;
  mpq_class to_mpq() const;
  double to_double() const;
  std::string to_string() const;

  /// Numerator / denominator as decimal strings.
  std::string numerator_string() const;
  std::string denominator_string() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b);
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

  BigRational abs() const { return sign() < 0 ? -*this : *this; }
  BigRational pow(long long exponent) const;

 private:
  void assign_mpq(mpq_class value);
  void assign_wide(__int128 num, __int128 den);

  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

}  // namespace qident
