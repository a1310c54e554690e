#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pwz/error.hpp"
#include "pwz/landmarks.hpp"
#include "../support/random.hpp"

using namespace pwz;

namespace {

Params fam1(const char* c) { return {-3, -5, Rational::parse(c), -1}; }
Params fam2(const char* c) { return {Rational(-3, 10), -1, Rational::parse(c), -60}; }

bool near(const QuadNum& x, const char* printed, const char* tol) {
  const Rational p = Rational::parse(printed);
  const Rational t = Rational::parse(tol);
  return compare(x, QuadNum(p - t)) >= 0 && compare(x, QuadNum(p + t)) <= 0;
}

}  // namespace

TEST_CASE("thresholds and landmark points") {
  const Landmarks l08 = compute_landmarks(fam1("0.8"));
  CHECK(l08.c_minus == QuadNum(1));
  CHECK(l08.c_plus == QuadNum(9));
  CHECK(l08.x_A == Rational(-5, 3));
  CHECK(l08.x_B == Rational(5, 4));
  CHECK(l08.delta_Delta == Rational(9) * Rational(1) + Rational(12) + Rational(16, 25));
  CHECK(Poly({Rational(25) - 4, Rational(30) + Rational(16, 5), 9}).eval(l08.x_Delta_plus) == QuadNum(0));

  const Landmarks l10 = compute_landmarks(fam1("10"));
  REQUIRE(l10.x_g_minus);
  CHECK(*l10.x_g_minus == QuadNum(Rational(1, 4)));
  CHECK(*l10.x_g_plus == QuadNum(1));

  const Landmarks l65 = compute_landmarks(fam2("65"));
  REQUIRE(l65.x_g_plus);
  CHECK(near(*l65.x_g_plus, "48.274", "0.001"));
  CHECK(near(*l65.x_g_minus, "0.956", "0.001"));
  CHECK(near(l65.c_minus, "-16.66", "0.01"));
  CHECK(near(l65.c_plus, "18.66", "0.01"));

  const Landmarks l5 = compute_landmarks(fam1("5"));
  CHECK_FALSE(l5.x_g_minus);
  CHECK_FALSE(l5.x_g_absent_reason.empty());
  CHECK(l5.J3.empty);
}

TEST_CASE("landmark zeros are zeros") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 25; ++i) {
    const Params p = test::random_regime(rng);
    const Landmarks lm = compute_landmarks(p);
    const AuxPolys aux = aux_polys(p);
    CHECK(aux.Delta.eval(lm.x_Delta_minus) == QuadNum(0));
    CHECK(aux.Delta.eval(lm.x_Delta_plus) == QuadNum(0));
    if (lm.x_g_minus) {
      CHECK(aux.g.eval(*lm.x_g_minus) == QuadNum(0));
      CHECK(aux.g.eval(*lm.x_g_plus) == QuadNum(0));
    }
    if (lm.x_0) {
      CHECK(aux.F.eval(*lm.x_0) == QuadNum(0));
      CHECK(lm.x_0->sign() > 0);
    }
    // c^+- are the zeros of the discriminant of g in c
    const Rational one_minus_a = Rational(1) - p.a;
    for (const QuadNum& t : {lm.c_minus, lm.c_plus}) {
      const QuadNum s = QuadNum(p.b) + t;
      CHECK(s * s + QuadNum(Rational(4) * p.d * one_minus_a) == QuadNum(0));
    }
  }
}

TEST_CASE("regime is enforced") {
  CHECK_THROWS_AS(compute_landmarks({3, -5, 1, -1}), Error);
  CHECK_THROWS_AS(compute_landmarks({-3, -5, -1, -1}), Error);
  try {
    compute_landmarks({-3, 5, 1, -1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Regime);
  }
}

TEST_CASE("case classification") {
  CHECK(classify_case(fam1("0.8")).label() == "CaseI");
  const CaseTag t10 = classify_case(fam1("10"));
  CHECK(t10.case_ii);
  CHECK(t10.case_iii);
  CHECK(t10.label() == "CaseII_even+CaseIII_odd");
  CHECK(classify_case(fam1("5")).label() == "Gap");
  CHECK(classify_case(fam1("1")).label() == "CaseI+Boundary");
  CHECK(classify_case(fam1("9")).label() == "CaseII_even+Boundary");
  CHECK(classify_case(fam2("65")).label() == "CaseII_even+CaseIII_odd");
  const CaseTag t20 = classify_case(fam2("20"));
  CHECK(t20.label() == "CaseII_even");
  REQUIRE(t20.w3_in_jg);
  CHECK_FALSE(*t20.w3_in_jg);
}

TEST_CASE("intervals") {
  const Landmarks l08 = compute_landmarks(fam1("0.8"));
  CHECK(l08.J1.contains(QuadNum(-2)));
  CHECK_FALSE(l08.J1.contains(QuadNum(l08.x_A)));
  CHECK(l08.J3.contains(l08.x_Delta_plus));
  CHECK(l08.J4.contains(QuadNum(0)));
  CHECK_FALSE(l08.J4.contains(QuadNum(Rational(1, 10))));
  const Landmarks l10 = compute_landmarks(fam1("10"));
  CHECK(l10.J4.contains(QuadNum(2)));
  CHECK(l10.Jg->contains(QuadNum(Rational(1, 2))));
  CHECK_FALSE(l10.Jg->contains(QuadNum(1)));
}

TEST_CASE("sign lemma") {
  const SignLemmaReport r08 = check_sign_lemma(fam1("0.8"), 20);
  CHECK(r08.all_pass());
  CHECK(r08.first_failure() == nullptr);
  CHECK(check_sign_lemma(fam2("65"), 12).all_pass());
  CHECK(check_sign_lemma(fam1("10"), 20).all_pass());
  CHECK(check_sign_lemma(fam2("20"), 20).all_pass());
  CHECK_THROWS_AS(check_sign_lemma(fam1("0.8"), 0), Error);

  // n = 1: W_1(x_B) = x_B > 0
  bool saw = false;
  for (const auto& c : r08.checks) {
    if (c.n == 1 && c.law == "(-1)^n W_n(x_B) < 0") {
      CHECK(c.pass);
      saw = true;
    }
  }
  CHECK(saw);
}

TEST_CASE("sign lemma with Delta_Delta = Delta_g") {
  // d = (bc(a-2) - b^2)/(a-2)^2 makes the two discriminants equal
  const Params p{-2, -4, Rational(1, 2), Rational(-1, 2)};
  const Landmarks lm = compute_landmarks(p);
  CHECK(lm.delta_Delta == lm.delta_g);
  CHECK(classify_case(p).case_i);
  CHECK(check_sign_lemma(p, 20).all_pass());
}

TEST_CASE("property: sign lemma for n <= 20 on random case I and case II parameters") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int i = 0; i < 40 && checked < 15; ++i) {
    const Params p = test::random_regime(rng);
    const CaseTag tag = classify_case(p);
    if (tag.gap) continue;
    CAPTURE(p.to_string());
    const SignLemmaReport r = check_sign_lemma(p, 20);
    if (!r.all_pass()) {
      const SignCheck* f = r.first_failure();
      FAIL_CHECK(f->law << " n=" << f->n << " " << f->detail);
    }
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("root location by interval") {
  const Params p = fam1("0.8");
  const Landmarks lm = compute_landmarks(p);
  const RootReport w4 = isolate_roots(generate(p, 4).W(4), 4);
  CHECK(count_in(w4, lm.J1) == 1);
  CHECK(count_in(w4, lm.J2) + count_in(w4, lm.J3) == 2);
  CHECK(count_in(w4, lm.J4) == 1);
  CHECK(roots_in(w4, lm.J1) == std::vector<std::size_t>{0});
  // a root sitting exactly on a closed endpoint is counted once
  const RootReport one = isolate_roots(Poly({0, 1}));
  CHECK(count_in(one, lm.J4) == 1);
  CHECK(count_in(one, Interval{"open", -1L, 0L, false, false, false}) == 0);
}
