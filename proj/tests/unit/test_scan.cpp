#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../oracles/frozen.hpp"
#include "pwz/bivariate.hpp"
#include "pwz/error.hpp"
#include "pwz/scan.hpp"

using namespace pwz;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("config parsing") {
  const SweepConfig c = parse_sweep_config(
      "# small run\n"
      "a_min = -2\n a_max=-1/2\n"
      "c_min=0.5  # inline\n"
      "samples=12\nseed=99\nn_max=6\nworkers=2\nout=log.jsonl\n");
  CHECK(c.a.lo == Rational(-2));
  CHECK(c.a.hi == Rational(-1, 2));
  CHECK(c.c.lo == Rational(1, 2));
  CHECK(c.samples == 12);
  CHECK(c.seed == 99);
  CHECK(c.n_max == 6);
  CHECK(c.workers == 2);
  CHECK(c.out == "log.jsonl");
  CHECK_THROWS_AS(parse_sweep_config("bogus=1\n"), Error);
  CHECK_THROWS_AS(parse_sweep_config("samples\n"), Error);
  CHECK_THROWS_AS(parse_sweep_config("c_min=0\n"), Error);
  CHECK_THROWS_AS(parse_sweep_config("a_max=1\n"), Error);
  CHECK_THROWS_AS(parse_sweep_config("a_min=-1\na_max=-2\n"), Error);
}

TEST_CASE("draws stay in range and are deterministic") {
  SweepConfig c;
  c.max_den = 50;
  for (long i = 0; i < 200; ++i) {
    const Params p = draw_params(c, i);
    CHECK(p.in_regime());
    CHECK(p.a >= c.a.lo);
    CHECK(p.a <= c.a.hi);
    CHECK(p.c >= c.c.lo);
    CHECK(p.c <= c.c.hi);
    CHECK(p.b.denominator() <= 50);
    CHECK(draw_params(c, i) == p);
  }
  SweepConfig other = c;
  other.seed = 2;
  CHECK_FALSE(draw_params(other, 0) == draw_params(c, 0));
}

TEST_CASE("evaluate_sample") {
  const SweepRecord r20 = evaluate_sample({Rational(-3, 10), -1, 20, -60}, 5);
  REQUIRE(r20.nonreal.size() == 5);
  CHECK(r20.nonreal[4] == 2);
  CHECK(r20.max_nonreal == 2);
  CHECK_FALSE(r20.violation);
  CHECK_FALSE(r20.error);

  const SweepRecord r08 = evaluate_sample({-3, -5, Rational(4, 5), -1}, 12);
  for (int k : r08.nonreal) CHECK(k == 0);
  CHECK(r08.case_label == "CaseI");
  CHECK(r08.theorem_consistent);

  const SweepRecord bad = evaluate_sample({-3, -5, 0, -1}, 4);
  CHECK(bad.error);
}

TEST_CASE("sweep is deterministic across worker counts") {
  const auto dir = std::filesystem::temp_directory_path();
  SweepConfig c;
  c.samples = 40;
  c.n_max = 8;
  c.seed = 5;
  c.workers = 1;
  c.out = (dir / "pwz_sweep_a.jsonl").string();
  const SweepResult a = scan_conjecture(c);
  c.workers = 3;
  c.out = (dir / "pwz_sweep_b.jsonl").string();
  const SweepResult b = scan_conjecture(c);
  const std::string la = slurp(dir / "pwz_sweep_a.jsonl");
  CHECK_FALSE(la.empty());
  CHECK(la == slurp(dir / "pwz_sweep_b.jsonl"));
  CHECK(a.summary.samples == 40);
  CHECK(a.summary.violations == 0);
  CHECK(a.summary.odd_nonreal == 0);
  CHECK(a.summary.by_case == b.summary.by_case);
  REQUIRE(a.records.size() == 40);
  for (long i = 0; i < 40; ++i) CHECK(a.records[static_cast<std::size_t>(i)].index == i);
  std::filesystem::remove(dir / "pwz_sweep_a.jsonl");
  std::filesystem::remove(dir / "pwz_sweep_b.jsonl");
}

TEST_CASE("discriminant of W_3 in c") {
  const Poly expected({oracle::kDiscW3[0], oracle::kDiscW3[1], oracle::kDiscW3[2], oracle::kDiscW3[3],
                       oracle::kDiscW3[4]});
  const CStarResult r = compute_c_star(-3, -5, -1);
  CHECK(r.discriminant == expected);

  // cubic discriminant by the closed formula, at a few values of c
  for (long c : {-3L, 1L, 2L, 9L, 17L}) {
    const Poly w3 = generate({-3, -5, c, -1}, 3).W(3);
    const Rational A = w3.coeff(3), B = w3.coeff(2), C = w3.coeff(1), D = w3.coeff(0);
    const Rational disc = Rational(18) * A * B * C * D - Rational(4) * B * B * B * D + B * B * C * C -
                          Rational(4) * A * C * C * C - Rational(27) * A * A * D * D;
    CHECK(r.discriminant.eval(Rational(c)) == disc);
  }
}

TEST_CASE("resultant basics") {
  // Res(z - c, z - 1) = 1 - c up to sign
  const ParamPoly f({Poly({0, -1}), Poly::constant(1)});
  const ParamPoly g = ParamPoly::from_poly(Poly({-1, 1}));
  const Poly res = resultant(f, g);
  CHECK(res.degree() == 1);
  CHECK(res.eval(Rational(1)).is_zero());
  // disc(z^2 + c) = -4c
  CHECK(discriminant(ParamPoly({Poly({0, 1}), Poly(), Poly::constant(1)})) == Poly({0, -4}));
}

TEST_CASE("c* for a = -3, b = -5, d = -1") {
  const CStarResult r = compute_c_star(-3, -5, -1, 16);
  CHECK(r.c_plus == QuadNum(9));
  REQUIRE(r.N);
  CHECK(r.N->lo <= Rational::parse("9.040962"));
  CHECK(r.N->hi >= Rational::parse("9.040960"));
  CHECK(r.which == "N");
  CHECK(r.upper >= Rational(9));
  CHECK(r.sample_c == r.upper + Rational(1));
  CHECK(r.verified);
  REQUIRE(r.sample_nonreal.size() == 16);
  for (int k : r.sample_nonreal) CHECK(k == 0);
  CHECK_THROWS_AS(compute_c_star(-1, -5, -1), Error);
  CHECK_THROWS_AS(compute_c_star(3, -5, -1), Error);
}
