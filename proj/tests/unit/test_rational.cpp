#include <doctest.h>

#include <climits>

#include "oracles.hpp"
#include "qident/error.hpp"
#include "qident/rational.hpp"

using qident::BigRational;

namespace {

mpq_class mpq(long long n, long long d) {
  mpq_class r(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
  r.canonicalize();
  return r;
}

long long random_ll(bool wide) {
  if (!wide) return oracle::uniform(-50, 50);
  std::uniform_int_distribution<long long> dist(LLONG_MIN / 2, LLONG_MAX / 2);
  return dist(oracle::rng());
}

}  // namespace

TEST_CASE("construction normalizes sign and lowest terms") {
  CHECK(BigRational(6, -4).to_string() == "-3/2");
  CHECK(BigRational(0, 7).to_string() == "0");
  CHECK(BigRational(10, 5).is_integer());
  CHECK_THROWS_AS(BigRational(1, 0), qident::Error);
}

TEST_CASE("parse and print round-trip") {
  for (const char* text : {"0", "-7", "3/4", "-22/7", "123456789012345678901234567891/2"})
    CHECK(BigRational::parse(text).to_string() == text);
  CHECK(BigRational::parse("4/6") == BigRational(2, 3));
}

TEST_CASE("field operations agree with GMP on random operands") {
  for (int trial = 0; trial < 2000; ++trial) {
    const bool wide = trial % 2 == 1;
    long long an = random_ll(wide), ad = random_ll(wide), bn = random_ll(wide), bd = random_ll(wide);
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 3;
    const BigRational a(an, ad), b(bn, bd);
    const mpq_class A = mpq(an, ad), B = mpq(bn, bd);
    CHECK((a + b).to_mpq() == A + B);
    CHECK((a - b).to_mpq() == A - B);
    CHECK((a * b).to_mpq() == A * B);
    if (bn != 0) CHECK((a / b).to_mpq() == A / B);
    CHECK(((a < b) == (A < B)));
    CHECK(((a == b) == (A == B)));
  }
}

TEST_CASE("overflowing results promote and demote exactly") {
  const BigRational big(LLONG_MAX);
  const BigRational sq = big * big;
  CHECK(!sq.to_int64().has_value());
  CHECK((sq / big) == big);
  CHECK((sq / big).to_int64() == LLONG_MAX);
  CHECK(BigRational(2).pow(100).to_string() == "1267650600228229401496703205376");
  CHECK(BigRational(2, 3).pow(-2) == BigRational(9, 4));
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), qident::Error);
}
