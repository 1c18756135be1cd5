#include "qident/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>

#include "qident/error.hpp"

namespace qident {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned long long gcd64(unsigned long long a, unsigned long long b) {
  while (b != 0) {
    unsigned long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

bool fits64(i128 v) { return v >= i128(LLONG_MIN) && v <= i128(LLONG_MAX); }

mpz_class mpz_from(i128 v) {
  u128 mag = uabs(v);
  mpz_class out(static_cast<unsigned long>(static_cast<unsigned long long>(mag >> 64)));
  out <<= 64;
  out += mpz_class(static_cast<unsigned long>(static_cast<unsigned long long>(mag)));
  if (v < 0) out = -out;
  return out;
}

}  // namespace

BigRational::BigRational(long long num, long long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  assign_wide(num, den);
}

BigRational::BigRational(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  assign_mpq(std::move(v));
}

BigRational::BigRational(const BigRational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

BigRational& BigRational::operator=(const BigRational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void BigRational::assign_mpq(mpq_class value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

void BigRational::assign_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(uabs(num), u128(den));
  if (g > 1) {
    num /= i128(g);
    den /= i128(g);
  }
  if (fits64(num) && fits64(den)) {
    num_ = static_cast<long long>(num);
    den_ = static_cast<long long>(den);
    big_.reset();
    return;
  }
  mpq_class q;
  q.get_num() = mpz_from(num);
  q.get_den() = mpz_from(den);
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

BigRational BigRational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string digits(s);
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (digits.size() == start) throw Error(ErrorKind::InvalidArgument, "bad rational literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i])))
        throw Error(ErrorKind::InvalidArgument, "bad rational literal '" + std::string(text) + "'");
    }
    if (digits[0] == '+') digits.erase(0, 1);
    return mpz_class(digits);
  };
  auto slash = text.find('/');
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(parse_int(text));
  } else {
    mpz_class n = parse_int(text.substr(0, slash));
    mpz_class d = parse_int(text.substr(slash + 1));
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    q = mpq_class(n, d);
    q.canonicalize();
  }
  return BigRational(q);
}

bool BigRational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int BigRational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::optional<long long> BigRational::to_int64() const {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

mpq_class BigRational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  q.get_num() = mpz_from(num_);
  q.get_den() = mpz_from(den_);
  return q;
}

double BigRational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string BigRational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string BigRational::numerator_string() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string BigRational::denominator_string() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

BigRational BigRational::operator-() const {
  BigRational out;
  if (big_) {
    out.assign_mpq(-*big_);
  } else if (num_ == LLONG_MIN) {
    out.assign_wide(-i128(num_), den_);
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      long long r;
      if (!__builtin_add_overflow(num_, rhs.num_, &r)) {
        num_ = r;
        return *this;
      }
      assign_wide(i128(num_) + rhs.num_, 1);
      return *this;
    }
    assign_wide(i128(num_) * rhs.den_ + i128(rhs.num_) * den_, i128(den_) * rhs.den_);
    return *this;
  }
  assign_mpq(to_mpq() + rhs.to_mpq());
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      long long r;
      if (!__builtin_sub_overflow(num_, rhs.num_, &r)) {
        num_ = r;
        return *this;
      }
      assign_wide(i128(num_) - rhs.num_, 1);
      return *this;
    }
    assign_wide(i128(num_) * rhs.den_ - i128(rhs.num_) * den_, i128(den_) * rhs.den_);
    return *this;
  }
  assign_mpq(to_mpq() - rhs.to_mpq());
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      long long r;
      if (!__builtin_mul_overflow(num_, rhs.num_, &r)) {
        num_ = r;
        return *this;
      }
      assign_wide(i128(num_) * rhs.num_, 1);
      return *this;
    }
    // cross-cancel first so the 128-bit products stay reduced
    unsigned long long g1 = gcd64(uabs(num_), static_cast<unsigned long long>(rhs.den_));
    unsigned long long g2 = gcd64(uabs(rhs.num_), static_cast<unsigned long long>(den_));
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 n = (i128(num_) / i128(g1)) * (i128(rhs.num_) / i128(g2));
    i128 d = (i128(den_) / i128(g2)) * (i128(rhs.den_) / i128(g1));
    assign_wide(n, d);
    return *this;
  }
  assign_mpq(to_mpq() * rhs.to_mpq());
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational");
  if (!big_ && !rhs.big_) {
    assign_wide(i128(num_) * rhs.den_, i128(den_) * rhs.num_);
    return *this;
  }
  assign_mpq(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const BigRational& a, const BigRational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // canonical forms: a promoted value never fits the inline representation
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

BigRational BigRational::pow(long long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    return (BigRational(1) / *this).pow(-exponent);
  }
  BigRational result(1);
  BigRational base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) {
  return os << value.to_string();
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ZeroAtPole: return "ZeroAtPole";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
    case ErrorKind::NonTruncatingInfiniteProduct: return "NonTruncatingInfiniteProduct";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::NonIntegerIndex: return "NonIntegerIndex";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NotAMonomial: return "NotAMonomial";
    case ErrorKind::UnknownCounter: return "UnknownCounter";
    case ErrorKind::UnknownWeight: return "UnknownWeight";
    case ErrorKind::UnknownSequence: return "UnknownSequence";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CatalogError: return "CatalogError";
  }
  return "Unknown";
}

}  // namespace qident
