#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pwz/error.hpp"
#include "pwz/landmarks.hpp"
#include "pwz/sequence.hpp"
#include "../support/random.hpp"

using namespace pwz;

namespace {

Params fam1(const char* c) { return {-3, -5, Rational::parse(c), -1}; }
Params fam2(const char* c) { return {Rational(-3, 10), -1, Rational::parse(c), -60}; }

}  // namespace

TEST_CASE("generate") {
  const auto b10 = generate(fam1("10"), 4);
  CHECK(b10.W(0) == Poly::constant(1));
  CHECK(b10.W(1) == Poly::identity());
  CHECK(b10.W(3) == Poly({5, -23, 10, 9}));
  const auto b08 = generate(fam1("0.8"), 4);
  CHECK(b08.W(2) == Poly({-1, Rational(-21, 5), -3}));
  CHECK(b08.W(4).coeff(0) == Rational(-24));
  CHECK(b08.W(4) == Poly({-24, Rational(-633, 5), Rational(-5284, 25), Rational(-663, 5), -27}));
  CHECK_THROWS_AS(generate({0, -5, 1, -1}, 3), Error);
  CHECK_THROWS_AS(generate({-3, -5, 0, -1}, 3), Error);
}

TEST_CASE("auxiliary polynomials") {
  const auto aux = aux_polys(fam1("10"));
  CHECK(aux.A == Poly({-5, -3}));
  CHECK(aux.B == Poly({-1, 10}));
  CHECK(aux.h == Poly({5, 5}));
  CHECK(aux.g == Poly({1, -5, 4}));
  CHECK(aux.Delta == aux.A * aux.A + Rational(4) * aux.B);
  CHECK(aux.F == Poly({24, 40, 9}));
}

TEST_CASE("four-term identity") {
  const auto bundle = generate(fam1("0.8"), 12);
  CHECK(check_four_term(bundle));
  CHECK_FALSE(check_four_term(bundle.with_replaced(7, bundle.W(7) + Poly::constant(1))));
  CHECK_THROWS_AS(check_four_term(generate(fam1("0.8"), 3)), Error);
}

TEST_CASE("property: four-term identity for n <= 20 on random regime parameters") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 10; ++i) {
    const Params p = test::random_regime(rng);
    CAPTURE(p.to_string());
    CHECK(check_four_term(generate(p, 20)));
  }
}

TEST_CASE("closed form evaluation") {
  const Params p = fam1("0.8");
  const auto bundle = generate(p, 8);
  for (const Rational x : {Rational(-1), Rational(1, 3), Rational(-7, 2)}) {
    CHECK(closed_form_eval(p, 0, x).real() == doctest::Approx(1.0));
    CHECK(closed_form_eval(p, 1, x).real() == doctest::Approx(x.to_double()));
  }
  const double exact = bundle.W(4).eval(Rational(-1)).to_double();
  const auto cf = closed_form_eval(p, 4, Rational(-1));
  CHECK(std::fabs(cf.real() - exact) <= 1e-9 * std::fabs(exact));
  CHECK(std::fabs(cf.imag()) <= 1e-9 * std::fabs(exact));
  // Delta(x) < 0 here, so the eigenvalues are complex
  const auto inside = closed_form_eval(p, 8, Rational(-1, 2));
  CHECK(inside.real() == doctest::Approx(bundle.W(8).eval(Rational(-1, 2)).to_double()).epsilon(1e-9));
}

TEST_CASE("W_n(x_g) = x_g^n") {
  const auto b10 = generate(fam1("10"), 10);
  for (int n = 0; n <= 10; ++n) CHECK(b10.W(n).eval(Rational(1)) == Rational(1));
  CHECK(check_xg_identity(b10, {QuadNum(Rational(1, 4)), QuadNum(1)}));
  CHECK_FALSE(check_xg_identity(b10, {QuadNum(Rational(1, 3))}));

  const Params p65 = fam2("65");
  const auto b65 = generate(p65, 8);
  const Landmarks lm = compute_landmarks(p65);
  CHECK(check_xg_identity(b65, lm));

  // c = 5 sits in the gap where the zeros of g are not real
  const Params p5 = fam1("5");
  CHECK_THROWS_AS(check_xg_identity(generate(p5, 4), compute_landmarks(p5)), Error);
}

TEST_CASE("property: x_g and x_Delta identities on random regime parameters") {
  std::mt19937_64 rng(99);
  int with_xg = 0;
  for (int i = 0; i < 12; ++i) {
    const Params p = test::random_regime(rng);
    CAPTURE(p.to_string());
    const Landmarks lm = compute_landmarks(p);
    const auto bundle = generate(p, 15);
    if (lm.x_g_minus) {
      CHECK(check_xg_identity(bundle, lm));
      ++with_xg;
    }
    CHECK(check_xdelta_identity(generate(p, 12), {lm.x_Delta_minus, lm.x_Delta_plus}));
  }
  CHECK(with_xg > 0);
  // the fixed examples always have real x_g
  for (const Params& p : {fam1("10"), fam1("0.8"), fam2("65"), fam2("20")}) {
    CHECK(check_xg_identity(generate(p, 15), compute_landmarks(p)));
    const Landmarks lm = compute_landmarks(p);
    CHECK(check_xdelta_identity(generate(p, 12), {lm.x_Delta_minus, lm.x_Delta_plus}));
  }
}

TEST_CASE("x_Delta identity fails off the zeros of Delta") {
  const auto bundle = generate(fam1("0.8"), 6);
  CHECK_FALSE(check_xdelta_identity(bundle, {QuadNum(Rational(1, 7))}));
}
