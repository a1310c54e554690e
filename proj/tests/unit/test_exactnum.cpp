#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pwz/error.hpp"
#include "pwz/quadnum.hpp"
#include "pwz/rational.hpp"
#include "../support/random.hpp"

using namespace pwz;

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("-3/10") == Rational(-3, 10));
  CHECK(Rational::parse("-0.3") == Rational(-3, 10));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("1.5e-2") == Rational(3, 200));
  CHECK(Rational::parse("−5") == Rational(-5));
  CHECK(Rational::parse("-3/10").denominator() > 0);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("leading zero mantissas parse in base 10") {
  // "0.8" -> digits "08", which a base-0 reader takes for octal
  CHECK(Rational::parse("0.8") == Rational(4, 5));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("0.09") == Rational(9, 100));
  CHECK(Rational::parse("010") == Rational(10));
  CHECK(Rational::parse("07/08") == Rational(7, 8));
}

TEST_CASE("rational decimal rounding") {
  CHECK(Rational(1, 3).to_decimal(4) == "0.3333");
  CHECK(Rational(-5, 3).to_decimal(2) == "-1.67");
  CHECK(Rational(1, 8).to_decimal(2) == "0.12");
  CHECK(Rational(3, 8).to_decimal(2) == "0.38");
  CHECK(Rational(7).to_decimal(0) == "7");
}

TEST_CASE("quad_add") {
  CHECK(QuadNum(1, 2, 3) + QuadNum(4, -2, 3) == QuadNum(5));
  const QuadNum x(Rational(2, 3), 5, 7);
  CHECK(QuadNum() + x == x);
  CHECK(QuadNum(-5) + QuadNum(0, 2, 4) == QuadNum(-1));
  CHECK_THROWS_AS(QuadNum::sqrt(2) + QuadNum::sqrt(3), Error);
  try {
    (void)(QuadNum::sqrt(2) + QuadNum::sqrt(3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompatibleRadicand);
  }
  // radicands differing by a square factor are the same extension
  CHECK(QuadNum::sqrt(8) - QuadNum(0, 2, 2) == QuadNum(0));
  CHECK(QuadNum::sqrt(Rational(1, 2)) == QuadNum(0, Rational(1, 2), 2));
}

TEST_CASE("quad_mul") {
  CHECK(QuadNum(1, 1, 2) * QuadNum(1, -1, 2) == QuadNum(-1));
  CHECK(QuadNum::sqrt(2) * QuadNum::sqrt(2) == QuadNum(2));
  CHECK(QuadNum(3, 2, 5) * QuadNum(3, 2, 5) == QuadNum(29, 12, 5));
  CHECK(QuadNum(3, 2, 5) / QuadNum(3, 2, 5) == QuadNum(1));
  CHECK_THROWS_AS(QuadNum(0).inverse(), Error);
  CHECK_THROWS_AS(QuadNum(0, 1, -2), Error);
}

TEST_CASE("quad_sign") {
  CHECK(QuadNum(-1, 1, 2).sign() == 1);
  CHECK(QuadNum(0).sign() == 0);
  CHECK(QuadNum(7, -5, 2).sign() == -1);
  CHECK(QuadNum(-7, 5, 2).sign() == 1);
  CHECK(QuadNum(3, 1, 2).sign() == 1);
  CHECK(QuadNum(-3, -1, 2).sign() == -1);
}

TEST_CASE("quad_approx") {
  const Rational eps(1, 1000);
  CHECK((QuadNum::sqrt(2).approx(eps) - Rational::parse("1.41421356")).abs() <= eps);
  CHECK(QuadNum(5).approx(Rational(1, 2)) == Rational(5));
  // c^+ of a=-3, b=-5, d=-1 is -b + 2 sqrt(d(a-1)) = 5 + 2*2
  const QuadNum c_plus = QuadNum(5) + Rational(2) * QuadNum::sqrt(Rational(-1) * Rational(-4));
  CHECK(c_plus.is_rational());
  CHECK(c_plus.approx(eps) == Rational(9));
  const QuadNum x(Rational(-17, 3), Rational(5, 7), 11);
  CHECK((x.approx(pow10(-30)) - Rational::parse("-3.29764895926995248872742899762")).abs() < pow10(-16));
}

TEST_CASE("mixed radicand ordering is exact") {
  CHECK(compare(QuadNum::sqrt(2), QuadNum::sqrt(3)) < 0);
  CHECK(compare(QuadNum(1, 1, 2), QuadNum(0, 1, 5)) > 0);  // 2.414 vs 2.236
  CHECK(compare(QuadNum(0, 1, 8), QuadNum(0, 2, 2)) == 0);
  // 1 + sqrt(2) vs sqrt(3 + 2 sqrt 2) style near ties
  CHECK(compare(QuadNum(Rational(577, 408)), QuadNum::sqrt(2)) > 0);
  CHECK(compare(QuadNum(Rational(1393, 985)), QuadNum::sqrt(2)) < 0);
}

TEST_CASE("canonical form") {
  const QuadNum x(Rational(1, 2), Rational(3, 4), Rational(12, 5));
  CHECK(x.radicand().is_integer());
  CHECK(QuadNum(x.p(), x.q(), x.radicand()) == x);
  CHECK(QuadNum(3, 0, 7).radicand().is_zero());
  CHECK(QuadNum(3, 2, 9) == QuadNum(9));
}

namespace {

QuadNum random_quad(std::mt19937_64& rng, const Rational& radicand) {
  return QuadNum(test::random_rational(rng, -20, 20), test::random_rational(rng, -5, 5), radicand);
}

}  // namespace

TEST_CASE("property: sign agrees with double away from zero") {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<long> rad(2, 200);
  int checked = 0;
  while (checked < 1000) {
    const QuadNum x = random_quad(rng, Rational(rad(rng)));
    const double v = x.p().to_double() + x.q().to_double() * std::sqrt(x.radicand().to_double());
    if (std::fabs(v) <= 1e-6) continue;
    CHECK(x.sign() == (v > 0 ? 1 : -1));
    ++checked;
  }
}

TEST_CASE("property: field axioms on one radicand") {
  std::mt19937_64 rng(7);
  for (long radicand : {2L, 3L, 5L, 6L, 10L, 7L * 11L}) {
    for (int i = 0; i < 40; ++i) {
      const QuadNum x = random_quad(rng, radicand);
      const QuadNum y = random_quad(rng, radicand);
      const QuadNum z = random_quad(rng, radicand);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x - x == QuadNum(0));
      if (x.sign() != 0) CHECK(x * x.inverse() == QuadNum(1));
      if (!x.is_rational()) CHECK((x * x.conjugate()).is_rational());
    }
  }
}
