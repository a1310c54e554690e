#include "pwz/landmarks.hpp"

#include <algorithm>

#include "pwz/error.hpp"

namespace pwz {

namespace {

enum class Side { Below, At, Above };

// Where root i of the report sits relative to a finite point, from the number
// of distinct roots <= point and whether the point itself is a root.
struct Rank {
  int le = 0;
  bool at = false;

  Side side(std::size_t i) const {
    const auto idx = static_cast<int>(i);
    if (idx < le - (at ? 1 : 0)) return Side::Below;
    if (at && idx == le - 1) return Side::At;
    return Side::Above;
  }
};

Rank rank_of(const RootReport& report, const Endpoint& point) {
  return {report.chain->count_le(point), report.chain->base().sign_at(point.value()) == 0};
}

std::string cmp_detail(const char* what, int sign) {
  return std::string(what) + (sign > 0 ? " > 0" : (sign < 0 ? " < 0" : " = 0"));
}

int sign_of_product(int parity_sign, int s) { return parity_sign * s; }

}  // namespace

bool Interval::contains(const QuadNum& x) const {
  if (empty) return false;
  if (lo.is_finite()) {
    const int c = compare(x, lo.value());
    if (c < 0 || (c == 0 && !lo_closed)) return false;
  }
  if (hi.is_finite()) {
    const int c = compare(x, hi.value());
    if (c > 0 || (c == 0 && !hi_closed)) return false;
  }
  return true;
}

std::string Interval::to_string() const {
  if (empty) return name + " = empty";
  return name + " = " + (lo_closed ? "[" : "(") + lo.to_string() + ", " + hi.to_string() +
         (hi_closed ? "]" : ")");
}

Landmarks compute_landmarks(const Params& params) {
  params.require_regime();
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational& c = params.c;
  const Rational& d = params.d;

  Landmarks lm;
  lm.params = params;
  lm.x_A = -b / a;
  lm.x_B = -d / c;
  lm.delta_Delta = -a * a * d + a * b * c + c * c;
  lm.delta_g = (b + c) * (b + c) + Rational(4) * d * (Rational(1) - a);
  if (lm.delta_Delta.sign() <= 0) {
    throw Error(ErrorKind::Internal, "Delta_Delta must be positive in the regime");
  }

  const Rational a2 = a * a;
  lm.x_Delta_minus = QuadNum((-a * b - Rational(2) * c) / a2, Rational(-2) / a2, lm.delta_Delta);
  lm.x_Delta_plus = QuadNum((-a * b - Rational(2) * c) / a2, Rational(2) / a2, lm.delta_Delta);
  lm.c_minus = QuadNum(-b, -2, d * (a - Rational(1)));
  lm.c_plus = QuadNum(-b, 2, d * (a - Rational(1)));

  const Rational two_one_minus_a = Rational(2) * (Rational(1) - a);  // positive since a < 0
  if (lm.delta_g.sign() >= 0) {
    lm.x_g_minus = QuadNum((b + c) / two_one_minus_a, -two_one_minus_a.inverse(), lm.delta_g);
    lm.x_g_plus = QuadNum((b + c) / two_one_minus_a, two_one_minus_a.inverse(), lm.delta_g);
  } else {
    lm.x_g_absent_reason = "Delta_g < 0, so g has no real zeros (c^- < c < c^+)";
  }

  const AuxPolys aux = aux_polys(params);
  const QuadNum h_at = aux.h.eval(lm.x_Delta_plus);
  if (h_at.sign() != 0) {
    lm.n_plus = -aux.A.eval(lm.x_Delta_plus) / h_at;
  } else {
    lm.n_plus_absent_reason = "h(x_Delta^+) = 0";
  }

  // F = a^2 z^2 + (2ab + c) z + (b^2 + d)
  const Rational lin = Rational(2) * a * b + c;
  const Rational disc_f = Rational(4) * a * b * c + c * c - Rational(4) * a2 * d;
  if (disc_f.sign() < 0) {
    lm.x_0_absent_reason = "F = A^2 + B has no real zeros";
  } else {
    const QuadNum upper(-lin / (Rational(2) * a2), (Rational(2) * a2).inverse(), disc_f);
    const QuadNum lower = upper.conjugate();
    if (upper.sign() > 0 && lower.sign() <= 0) {
      lm.x_0 = upper;
    } else {
      lm.x_0_absent_reason = upper.sign() > 0 ? "F has two positive zeros" : "F has no positive zero";
    }
  }

  lm.J1 = {"J1", lm.x_Delta_minus, lm.x_A, false, false, false};
  lm.J2 = {"J2", lm.x_A, lm.x_Delta_plus, false, false, false};
  if (lm.x_g_minus) {
    lm.J3 = {"J3", lm.x_Delta_plus, *lm.x_g_minus, true, false, false};
    lm.J3.empty = compare(lm.x_Delta_plus, *lm.x_g_minus) >= 0;
    if (lm.x_g_plus->sign() < 0) {
      lm.J4 = {"J4", *lm.x_g_plus, 0L, false, true, false};
    } else {
      lm.J4 = {"J4", *lm.x_g_plus, Endpoint::pos_inf(), false, false, false};
    }
    lm.Jg = Interval{"Jg", *lm.x_g_minus, *lm.x_g_plus, false, false, false};
    lm.Jg->empty = compare(*lm.x_g_minus, *lm.x_g_plus) >= 0;
  } else {
    lm.J3 = {"J3", lm.x_Delta_plus, Endpoint::pos_inf(), true, false, true};
    lm.J4 = {"J4", Endpoint::neg_inf(), 0L, false, true, true};
  }
  return lm;
}

std::string CaseTag::label() const {
  std::string out;
  auto add = [&out](const char* s) {
    if (!out.empty()) out += "+";
    out += s;
  };
  if (case_i) add("CaseI");
  if (case_ii) add("CaseII_even");
  if (case_iii) add("CaseIII_odd");
  if (gap) add("Gap");
  if (boundary) add("Boundary");
  return out;
}

int w3_zeros_in_jg(const Landmarks& landmarks, const RootReport& w3) {
  if (!landmarks.Jg) return 0;
  int total = 0;
  for (std::size_t i : roots_in(w3, *landmarks.Jg)) total += w3.real_roots[i].multiplicity;
  return total;
}

CaseTag classify_case(const Landmarks& landmarks, const RootReport& w3) {
  const QuadNum c(landmarks.params.c);
  const int vs_minus = compare(c, landmarks.c_minus);
  const int vs_plus = compare(c, landmarks.c_plus);
  CaseTag tag;
  tag.case_i = vs_minus <= 0;
  tag.case_ii = vs_plus >= 0;
  tag.gap = vs_minus > 0 && vs_plus < 0;
  tag.boundary = vs_minus == 0 || vs_plus == 0;
  if (vs_plus > 0) {
    tag.w3_in_jg = w3_zeros_in_jg(landmarks, w3) >= 2;
    tag.case_iii = *tag.w3_in_jg;
  }
  return tag;
}

CaseTag classify_case(const Params& params) {
  const Landmarks lm = compute_landmarks(params);
  return classify_case(lm, isolate_roots(generate(params, 3).W(3), 3));
}

bool SignLemmaReport::all_pass() const { return first_failure() == nullptr; }

const SignCheck* SignLemmaReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

SignLemmaReport check_sign_lemma(const Params& params, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 1");
  const Landmarks lm = compute_landmarks(params);
  const SequenceBundle bundle = generate(params, std::max(n_max, 3));
  SignLemmaReport report;
  report.tag = classify_case(lm, isolate_roots(bundle.W(3), 3));
  auto& checks = report.checks;

  auto order = [&checks](const char* law, bool ok) { checks.push_back({law, 0, ok, ok ? "holds" : "violated"}); };
  const QuadNum xA(lm.x_A);
  const QuadNum xB(lm.x_B);
  order("Delta_Delta > 0", lm.delta_Delta.sign() > 0);
  order("max(0, c^-) < c^+", lm.c_plus.sign() > 0 && compare(lm.c_minus, lm.c_plus) < 0);
  order("x_Delta^- < x_A", compare(lm.x_Delta_minus, xA) < 0);
  order("x_A < 0", lm.x_A.sign() < 0);
  order("0 < x_B", lm.x_B.sign() > 0);
  order("x_A < x_Delta^+", compare(xA, lm.x_Delta_plus) < 0);
  order("x_Delta^+ < x_B", compare(lm.x_Delta_plus, xB) < 0);
  const AuxPolys& aux = bundle.aux();
  order("A(x_Delta^-) > 0", aux.A.eval(lm.x_Delta_minus).sign() > 0);
  order("A(x_Delta^+) < 0", aux.A.eval(lm.x_Delta_plus).sign() < 0);
  if (report.tag.case_i) {
    order("x_Delta^+ <= x_g^-", compare(lm.x_Delta_plus, *lm.x_g_minus) <= 0);
    order("x_g^- <= x_g^+", compare(*lm.x_g_minus, *lm.x_g_plus) <= 0);
    order("x_g^+ < 0", lm.x_g_plus->sign() < 0);
  }
  if (report.tag.case_ii) {
    order("x_B < x_g^-", compare(xB, *lm.x_g_minus) < 0);
    order("0 < n^+ < 2", lm.n_plus && lm.n_plus->sign() > 0 && compare(*lm.n_plus, QuadNum(2)) < 0);
  }

  for (int n = 1; n <= n_max; ++n) {
    const Poly& w = bundle.W(n);
    const int parity = n % 2 == 0 ? 1 : -1;
    const int ceil_parity = ((n + 1) / 2) % 2 == 0 ? 1 : -1;
    auto law = [&checks, n](const char* text, int value, int expected, const char* quantity) {
      checks.push_back({text, n, value == expected, cmp_detail(quantity, value)});
    };
    law("(-1)^ceil(n/2) W_n(x_A) > 0", sign_of_product(ceil_parity, w.sign_at(lm.x_A)), 1,
        "(-1)^ceil(n/2) W_n(x_A)");
    law("(-1)^n W_n(x_B) < 0", sign_of_product(parity, w.sign_at(lm.x_B)), -1, "(-1)^n W_n(x_B)");
    law("W_n(x_Delta^-) < 0", w.sign_at(lm.x_Delta_minus), -1, "W_n(x_Delta^-)");
    if (report.tag.case_i) {
      law("(-1)^n W_n(x_g^-) > 0", sign_of_product(parity, w.sign_at(*lm.x_g_minus)), 1, "(-1)^n W_n(x_g^-)");
      law("(-1)^n W_n(x_g^+) > 0", sign_of_product(parity, w.sign_at(*lm.x_g_plus)), 1, "(-1)^n W_n(x_g^+)");
      int expected = 1;
      if (lm.delta_Delta > lm.delta_g && lm.n_plus) {
        const int vs = compare(QuadNum(n), *lm.n_plus);
        expected = vs > 0 ? -1 : (vs == 0 ? 0 : 1);
      }
      law("(-1)^n W_n(x_Delta^+) three-way law", sign_of_product(parity, w.sign_at(lm.x_Delta_plus)), expected,
          "(-1)^n W_n(x_Delta^+)");
    }
    if (report.tag.case_ii) {
      law("W_n(x_g^-) > 0", w.sign_at(*lm.x_g_minus), 1, "W_n(x_g^-)");
      law("W_n(x_g^+) > 0", w.sign_at(*lm.x_g_plus), 1, "W_n(x_g^+)");
      if (n >= 2) {
        law("(-1)^n W_n(x_Delta^+) < 0", sign_of_product(parity, w.sign_at(lm.x_Delta_plus)), -1,
            "(-1)^n W_n(x_Delta^+)");
      }
    }
  }
  return report;
}

bool check_xg_identity(const SequenceBundle& bundle, const Landmarks& landmarks) {
  if (!landmarks.x_g_minus || !landmarks.x_g_plus) {
    throw Error(ErrorKind::NotApplicable, "x_g^+- are not real: " + landmarks.x_g_absent_reason);
  }
  return check_xg_identity(bundle, std::vector<QuadNum>{*landmarks.x_g_minus, *landmarks.x_g_plus});
}

std::vector<std::size_t> roots_in(const RootReport& report, const Interval& iv) {
  std::vector<std::size_t> out;
  if (iv.empty || report.real_roots.empty()) return out;
  std::optional<Rank> lo;
  std::optional<Rank> hi;
  if (iv.lo.is_finite()) lo = rank_of(report, iv.lo);
  if (iv.hi.is_finite()) hi = rank_of(report, iv.hi);
  for (std::size_t i = 0; i < report.real_roots.size(); ++i) {
    if (lo) {
      const Side s = lo->side(i);
      if (s == Side::Below || (s == Side::At && !iv.lo_closed)) continue;
    }
    if (hi) {
      const Side s = hi->side(i);
      if (s == Side::Above || (s == Side::At && !iv.hi_closed)) continue;
    }
    out.push_back(i);
  }
  return out;
}

int count_in(const RootReport& report, const Interval& iv) {
  int total = 0;
  for (std::size_t i : roots_in(report, iv)) total += report.real_roots[i].multiplicity;
  return total;
}

}  // namespace pwz
