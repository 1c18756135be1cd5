#include <doctest.h>

#include "oracles.hpp"
#include "qident/error.hpp"
#include "qident/laurent_poly.hpp"

using qident::BigRational;
using qident::LaurentPoly;
using qident::Var;

namespace {

LaurentPoly random_poly(int max_terms = 5, int spread = 3) {
  LaurentPoly p;
  const int terms = oracle::uniform(0, max_terms);
  for (int i = 0; i < terms; ++i)
    p += LaurentPoly::monomial(BigRational(oracle::uniform(-9, 9), oracle::uniform(1, 4)),
                               oracle::uniform(-spread, spread), oracle::uniform(-spread, spread));
  return p;
}

BigRational random_point() {
  int num = 0;
  while (num == 0) num = oracle::uniform(-20, 20);
  return BigRational(num, oracle::uniform(1, 20));
}

}  // namespace

TEST_CASE("canonical rendering") {
  const LaurentPoly z = LaurentPoly::variable(Var::Z), c = LaurentPoly::variable(Var::C);
  CHECK(qident::geometric_weight(3).to_string() == "z^2 + z*c + c^2");
  CHECK((z - z).is_zero());
  CHECK(LaurentPoly(0).to_string() == "0");
  CHECK((z * c + z * z).to_string() == "z^2 + z*c");
}

TEST_CASE("ring axioms on random polynomials") {
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly();
    const BigRational z0 = random_point(), c0 = random_point();
    CHECK((a * b).eval(z0, c0) == a.eval(z0, c0) * b.eval(z0, c0));
    CHECK((a + b).eval(z0, c0) == a.eval(z0, c0) + b.eval(z0, c0));
    CHECK(a.substitute(Var::Z, z0).eval(BigRational(5), c0) == a.eval(z0, c0));
  }
}

TEST_CASE("exact division recovers the cofactor") {
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(), b = random_poly();
    if (b.is_zero()) continue;
    CHECK((a * b).exact_div(b) == a);
  }
  const LaurentPoly one_minus_c = LaurentPoly(1) - LaurentPoly::variable(Var::C);
  CHECK_THROWS_AS(LaurentPoly(1).exact_div(one_minus_c), qident::Error);
  CHECK_THROWS_AS(LaurentPoly(1).exact_div(LaurentPoly()), qident::Error);
}

TEST_CASE("geometric weight telescopes") {
  const LaurentPoly z = LaurentPoly::variable(Var::Z), c = LaurentPoly::variable(Var::C);
  for (int s = 1; s <= 8; ++s) CHECK(qident::geometric_weight(s) * (z - c) == z.pow(s) - c.pow(s));
}
