#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pwz/poly.hpp"
#include "pwz/sequence.hpp"
#include "../support/random.hpp"

using namespace pwz;

namespace {

const Poly z = Poly::identity();

Poly from_roots(std::initializer_list<long> roots) {
  Poly p = Poly::constant(1);
  for (long r : roots) p = p * Poly::linear(1, -r);
  return p;
}

}  // namespace

TEST_CASE("arithmetic") {
  CHECK(z * z == Poly::monomial(1, 2));
  const Rational a(-3), b(-5), c(7, 2), d(-1);
  const Poly w2 = Poly::linear(a, b) * z + Poly::linear(c, d) * Poly::constant(1);
  CHECK(w2 == Poly({d, b + c, a}));
  CHECK(w2.to_string() == "-3z^2 - 3/2z - 1");
  CHECK((w2 - w2).is_zero());
  CHECK((w2 - w2).degree() == -1);
  CHECK((w2 * Rational(0)).is_zero());
  CHECK(Poly({1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("evaluation") {
  CHECK(Poly::monomial(1, 3).eval(Rational(2)) == Rational(8));
  const Poly w2({-1, Rational::parse("0.8") - 5, -3});
  CHECK(w2.eval(Rational(0)) == Rational(-1));
  const Poly w3({5, -23, 10, 9});
  CHECK(w3.eval(Rational(1)) == Rational(1));
  CHECK(Poly({-2, 0, 1}).eval(QuadNum::sqrt(2)) == QuadNum(0));
  CHECK(Poly({-2, 0, 1}).eval(QuadNum::sqrt(3)) == QuadNum(1));
  CHECK(w3.eval(0.5) == doctest::Approx(w3.eval(Rational(1, 2)).to_double()));
}

TEST_CASE("derivative") {
  CHECK(Poly::monomial(1, 3).derivative() == Poly::monomial(3, 2));
  CHECK(Poly::constant(7).derivative().is_zero());
  const Poly w2({-1, Rational::parse("0.8") - 5, -3});
  CHECK(w2.derivative() == Poly({Rational(-21, 5), -6}));
}

TEST_CASE("gcd") {
  CHECK(gcd(Poly({-1, 0, 1}), Poly({-1, 1})) == Poly({-1, 1}));
  const Poly p({-2, 0, 1});
  CHECK(gcd(p, p.derivative()) == Poly::constant(1));
  const Poly l = from_roots({1, 1, -2});
  const Poly r = from_roots({1, -3});
  CHECK(gcd(l, r) == Poly({-1, 1}));
  CHECK(gcd(Poly({2, 4}), Poly()) == Poly({Rational(1, 2), 1}));
}

TEST_CASE("divmod") {
  const Poly a = from_roots({1, 2, 3}) + Poly::constant(5);
  const Poly b({1, 0, 2});
  const DivMod qr = divmod(a, b);
  CHECK(qr.quotient * b + qr.remainder == a);
  CHECK(qr.remainder.degree() < b.degree());
}

TEST_CASE("squarefree decomposition") {
  const auto sq = squarefree_decomposition(from_roots({1, 1}));
  CHECK(sq.squarefree == Poly({-1, 1}));
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].multiplicity == 2);

  const Poly simple({-2, 0, 1});
  const auto sf = squarefree_decomposition(simple);
  CHECK(sf.squarefree == simple);
  REQUIRE(sf.factors.size() == 1);
  CHECK(sf.factors[0].multiplicity == 1);

  const auto cubic = squarefree_decomposition(Poly({2, -3, 0, 1}));
  CHECK(cubic.squarefree == Poly({-2, 1, 1}));
  REQUIRE(cubic.factors.size() == 2);
  CHECK(cubic.factors[0].factor == Poly({2, 1}));
  CHECK(cubic.factors[0].multiplicity == 1);
  CHECK(cubic.factors[1].factor == Poly({-1, 1}));
  CHECK(cubic.factors[1].multiplicity == 2);
}

TEST_CASE("property: squarefree decomposition recomposes") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> root(-4, 4);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int i = 0; i < 50; ++i) {
    Poly p = Poly::constant(test::random_rational(rng, 1, 9));
    for (int k = 0; k < 3; ++k) p = p * pow(Poly::linear(1, root(rng)), static_cast<unsigned>(mult(rng)));
    p = p * Poly({1, 0, 1});
    const auto dec = squarefree_decomposition(p);
    Poly back = Poly::constant(p.leading());
    for (const auto& f : dec.factors) back = back * pow(f.factor, static_cast<unsigned>(f.multiplicity));
    CHECK(back == p);
    CHECK(gcd(dec.squarefree, dec.squarefree.derivative()) == Poly::constant(1));
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> pc, qc;
    for (int k = 0; k < 5; ++k) pc.push_back(test::random_rational(rng, -9, 9));
    for (int k = 0; k < 4; ++k) qc.push_back(test::random_rational(rng, -9, 9));
    const Poly p(pc), q(qc);
    const QuadNum x(test::random_rational(rng, -3, 3), test::random_rational(rng, -3, 3), 5);
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
  }
}

TEST_CASE("sequence degree and leading coefficient for n <= 30") {
  const Params params{-3, -5, Rational(4, 5), -1};
  const auto bundle = generate(params, 30);
  for (int n = 1; n <= 30; ++n) {
    CHECK(bundle.W(n).degree() == n);
    CHECK(bundle.W(n).leading() == pow(params.a, static_cast<unsigned>(n - 1)));
  }
}
