#include <doctest.h>

#include "oracles.hpp"
#include "qident/error.hpp"
#include "qident/qseries.hpp"

using namespace qident;

namespace {

QSeries random_series(int N, Mode mode, bool unit_constant) {
  QSeries s(N, mode);
  for (int n = 0; n <= N; ++n) {
    LaurentPoly p = BigRational(oracle::uniform(-5, 5));
    if (mode == Mode::Symbolic && oracle::uniform(0, 1))
      p += LaurentPoly::monomial(oracle::uniform(-3, 3), oracle::uniform(-2, 2), oracle::uniform(-2, 2));
    s.set(n, p);
  }
  if (unit_constant) s.set(0, LaurentPoly(BigRational(oracle::uniform(1, 4))));
  return s;
}

std::vector<long long> ints(const QSeries& s) {
  std::vector<long long> out;
  for (int n = 0; n <= s.order(); ++n) out.push_back(*s[n].constant_term().to_int64());
  return out;
}

}  // namespace

TEST_CASE("(q;q)_inf at N=5") {
  const QSeries e = qs_poch(Monomial{1, 0, 0, 1}, kInfinity, 1, 5, Mode::Symbolic);
  CHECK(e.to_string() == "1 - q - q^2 + q^5");
}

TEST_CASE("(q;q)_inf matches pentagonal numbers up to 60") {
  const QSeries e = qs_poch(Monomial{1, 0, 0, 1}, kInfinity, 1, 60, Mode::Specialized);
  std::vector<long long> want(61, 0);
  for (int k = -10; k <= 10; ++k) {
    const int g = k * (3 * k - 1) / 2;
    if (g <= 60) want[g] += (k % 2 == 0) ? 1 : -1;
  }
  CHECK(ints(e) == want);
}

TEST_CASE("1/(q;q)_inf gives p(n)") {
  const QSeries e = qs_poch(Monomial{1, 0, 0, 1}, kInfinity, 1, 50, Mode::Specialized);
  CHECK(ints(e.inverse()) == oracle::partition_numbers(50));
}

TEST_CASE("Gaussian binomials") {
  CHECK(qs_qbin(4, 2, 1, 10, Mode::Symbolic).to_string() == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK(qs_qbin(3, 5, 1, 10, Mode::Symbolic).is_zero());
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(qs_qbin(n, k, 1, 30, Mode::Symbolic) == qs_qbin(n, n - k, 1, 30, Mode::Symbolic));
      // Evaluated at q = 1 the Gaussian binomial is the ordinary one.
      const QSeries g = qs_qbin(n, k, 1, 40, Mode::Specialized);
      long long at_one = 0, binom = 1;
      for (int i = 0; i <= 40; ++i) at_one += *g[i].constant_term().to_int64();
      for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      CHECK(at_one == binom);
    }
}

TEST_CASE("inverse and division properties") {
  for (Mode mode : {Mode::Symbolic, Mode::Specialized})
    for (int trial = 0; trial < 40; ++trial) {
      const int N = oracle::uniform(0, 12);
      const QSeries a = random_series(N, mode, false), b = random_series(N, mode, true);
      CHECK(a.divide(b) * b == a);
      CHECK(b.inverse() * b == QSeries::constant(LaurentPoly(1), N, mode));
    }
}

TEST_CASE("binomial multiply and divide are inverse") {
  for (int trial = 0; trial < 40; ++trial) {
    const QSeries a = random_series(15, Mode::Symbolic, false);
    const Monomial x{BigRational(oracle::uniform(-3, 3)), oracle::uniform(-1, 1), oracle::uniform(-1, 1),
                     oracle::uniform(1, 4)};
    QSeries b = a;
    b.mul_binomial(x).div_binomial(x);
    CHECK(b == a);
  }
}

TEST_CASE("specialization commutes with products") {
  for (int trial = 0; trial < 30; ++trial) {
    const QSeries a = random_series(10, Mode::Symbolic, false), b = random_series(10, Mode::Symbolic, false);
    const BigRational z0(oracle::uniform(1, 9), 7), c0(-oracle::uniform(1, 9), 5);
    CHECK((a * b).specialize(z0, c0) == a.specialize(z0, c0) * b.specialize(z0, c0));
  }
}

TEST_CASE("mode and order mismatches are errors") {
  const QSeries s(5, Mode::Symbolic), t(5, Mode::Specialized), u(6, Mode::Symbolic);
  CHECK_THROWS_AS(s + t, Error);
  CHECK_THROWS_AS(s + u, Error);
  QSeries v(5, Mode::Specialized);
  CHECK_THROWS_AS(v.set(1, LaurentPoly::variable(Var::Z)), Error);
}

TEST_CASE("infinite product of a q-free monomial does not truncate") {
  try {
    qs_poch(Monomial{BigRational(1, 2)}, kInfinity, 1, 5, Mode::Specialized);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonTruncatingInfiniteProduct);
  }
}

TEST_CASE("reindex and shift") {
  QSeries s(10, Mode::Symbolic);
  s.set(1, LaurentPoly(1));
  s.set(3, LaurentPoly(2));
  const auto r = qs_reindex(s, 2);
  CHECK(r.series.to_string() == "q^2 + 2*q^6");
  CHECK(s.shift_down(1).to_string() == "1 + 2*q^2");
  CHECK_THROWS_AS(s.shift_down(2), Error);
}
