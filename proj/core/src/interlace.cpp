#include "pwz/interlace.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "pwz/error.hpp"

namespace pwz {

namespace {

struct RootRef {
  IsolatingInterval iv;
  const SturmChain* chain;
  int multiplicity;
};

std::vector<RootRef> refs(const RootReport& report, const std::vector<std::size_t>& idx) {
  std::vector<RootRef> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) {
    const auto& iv = report.real_roots[i];
    out.push_back({iv, report.chain.get(), iv.multiplicity});
  }
  return out;
}

double approx(const RootRef& r) {
  return approximate_root(r.iv, *r.chain, Rational(1, 1000000000)).to_double();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

struct Group {
  int u = 0;  // multiplicity from p
  int v = 0;  // multiplicity from q
  double where = 0.0;
};

// Groups of equal roots in ascending order, built with exact comparisons.
std::vector<Group> merge(std::vector<RootRef> ps, std::vector<RootRef> qs) {
  std::vector<Group> out;
  std::size_t i = 0, j = 0;
  while (i < ps.size() || j < qs.size()) {
    int c;
    if (i == ps.size()) {
      c = 1;
    } else if (j == qs.size()) {
      c = -1;
    } else {
      c = compare_roots(ps[i].iv, *ps[i].chain, qs[j].iv, *qs[j].chain);
    }
    if (c < 0) {
      out.push_back({ps[i].multiplicity, 0, approx(ps[i])});
      ++i;
    } else if (c > 0) {
      out.push_back({0, qs[j].multiplicity, approx(qs[j])});
      ++j;
    } else {
      out.push_back({ps[i].multiplicity, qs[j].multiplicity, approx(ps[i])});
      ++i;
      ++j;
    }
  }
  return out;
}

// Can the multiset be laid out as alpha_1 <= beta_1 <= alpha_2 <= ... starting
// with the given label? Inside a group of equal values any order is allowed.
// Returns the index of the first group that breaks alternation, or -1.
int alternation_break(const std::vector<Group>& groups, bool start_with_p) {
  bool expect_p = start_with_p;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const auto& g = groups[k];
    if (g.u == g.v) continue;
    if (g.u == g.v + 1 && expect_p) {
      expect_p = false;
    } else if (g.v == g.u + 1 && !expect_p) {
      expect_p = true;
    } else {
      return static_cast<int>(k);
    }
  }
  return -1;
}

// Exact direction of a sequence of roots: +1 increasing, -1 decreasing, 0 mixed.
int direction(std::vector<RootRef> seq) {
  int dir = 2;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const int c = -compare_roots(seq[k - 1].iv, *seq[k - 1].chain, seq[k].iv, *seq[k].chain);
    if (c == 0) return 0;
    if (dir == 2) {
      dir = c;
    } else if (dir != c) {
      return 0;
    }
  }
  return dir == 2 ? 2 : dir;
}

MonotoneTrace make_trace(const std::string& zero, const std::string& printed, const std::vector<int>& ns,
                         const std::vector<RootRef>& seq) {
  MonotoneTrace t;
  t.zero = zero;
  t.printed = printed;
  t.n = ns;
  for (const auto& r : seq) t.value.push_back(approx(r));
  const int dir = direction(seq);
  t.observed = dir == 2 ? "n/a" : (dir > 0 ? "increasing" : (dir < 0 ? "decreasing" : "mixed"));
  t.consistent = dir == 2 || t.observed == printed;
  return t;
}

std::string counts_detail(const char* what, int got, int expected) {
  return std::string(what) + " = " + std::to_string(got) + " (expected " + std::to_string(expected) + ")";
}

}  // namespace

std::optional<W3Bounds> w3_bounds(const RootReport& w3) {
  if (w3.degree != 3 || w3.n_real_with_mult != 3) return std::nullopt;
  std::vector<IsolatingInterval> expanded;
  for (const auto& iv : w3.real_roots) {
    for (int k = 0; k < iv.multiplicity; ++k) expanded.push_back(iv);
  }
  return W3Bounds{expanded[1], expanded[2], w3.chain};
}

std::vector<std::size_t> roots_in_i(const RootReport& report, const Landmarks& landmarks, const W3Bounds& w3,
                                    int which) {
  std::vector<std::size_t> out;
  if (!landmarks.Jg) return out;
  for (std::size_t i : roots_in(report, *landmarks.Jg)) {
    IsolatingInterval root = report.real_roots[i];
    IsolatingInterval bound = which == 3 ? w3.xi2 : w3.xi3;
    const int c = compare_roots(root, *report.chain, bound, *w3.chain);
    if ((which == 3 && c < 0) || (which == 4 && c > 0)) out.push_back(i);
  }
  return out;
}

IntervalCounts interval_counts(const RootReport& report, const Landmarks& landmarks, const CaseTag& tag,
                               const W3Bounds* w3) {
  IntervalCounts c;
  c.n = report.poly_id;
  c.real = report.n_real_with_mult;
  c.J1 = count_in(report, landmarks.J1);
  c.J2 = count_in(report, landmarks.J2);
  c.J3 = count_in(report, landmarks.J3);
  c.J4 = count_in(report, landmarks.J4);
  c.J23 = c.J2 + c.J3;
  if (landmarks.Jg) c.Jg = count_in(report, *landmarks.Jg);
  if (w3 != nullptr && tag.case_iii) {
    auto mult = [&report](const std::vector<std::size_t>& idx) {
      int total = 0;
      for (std::size_t i : idx) total += report.real_roots[i].multiplicity;
      return total;
    };
    c.I3 = mult(roots_in_i(report, landmarks, *w3, 3));
    c.I4 = mult(roots_in_i(report, landmarks, *w3, 4));
  }
  return c;
}

std::string to_string(InterlaceStatus status) {
  switch (status) {
    case InterlaceStatus::Strict: return "strict";
    case InterlaceStatus::Weak: return "weak";
    case InterlaceStatus::Fail: return "fail";
    case InterlaceStatus::Degenerate: return "degenerate";
  }
  return "fail";
}

InterlacingVerdict check_pair_interlacing(const RootReport& p, const RootReport& q, const Interval& iv) {
  InterlacingVerdict v;
  v.p_id = p.poly_id;
  v.q_id = q.poly_id;
  v.interval = iv.name;
  auto ps = refs(p, roots_in(p, iv));
  auto qs = refs(q, roots_in(q, iv));
  for (const auto& r : ps) v.p_count += r.multiplicity;
  for (const auto& r : qs) v.q_count += r.multiplicity;
  if (v.p_count + v.q_count <= 1) {
    v.status = InterlaceStatus::Degenerate;
    v.witness = "singleton or empty pair";
    return v;
  }

  const auto groups = merge(std::move(ps), std::move(qs));
  const bool identical = std::all_of(groups.begin(), groups.end(), [](const Group& g) { return g.u == g.v; });
  if (identical) {
    v.status = InterlaceStatus::Fail;
    v.witness = "identical zero sets on " + iv.name + ", first common zero ~ " + fmt(groups.front().where);
    return v;
  }
  const bool ties = std::any_of(groups.begin(), groups.end(), [](const Group& g) {
    return (g.u > 0 && g.v > 0) || g.u > 1 || g.v > 1;
  });
  const int from_p = alternation_break(groups, true);
  const int from_q = alternation_break(groups, false);
  if (from_p < 0 || from_q < 0) {
    v.status = ties ? InterlaceStatus::Weak : InterlaceStatus::Strict;
    if (ties) {
      for (const auto& g : groups) {
        if (g.u + g.v > 1) {
          v.witness = "shared or repeated zero ~ " + fmt(g.where);
          break;
        }
      }
    }
    return v;
  }
  v.status = InterlaceStatus::Fail;
  const auto& bad = groups[static_cast<std::size_t>(std::max(from_p, from_q))];
  v.witness = "alternation breaks near " + fmt(bad.where) + " (W_" + std::to_string(p.poly_id) + ": " +
              std::to_string(v.p_count) + " zeros, W_" + std::to_string(q.poly_id) + ": " +
              std::to_string(v.q_count) + " zeros)";
  return v;
}

bool CaseReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.informational && !c.pass) return false;
  }
  for (const auto& v : verdicts) {
    if (!v.acceptable()) return false;
  }
  for (const auto& t : traces) {
    if (!t.consistent) return false;
  }
  return true;
}

std::vector<RootReport> isolate_sequence(const SequenceBundle& bundle) {
  std::vector<std::future<RootReport>> jobs;
  for (int n = 1; n <= bundle.n_max(); ++n) {
    jobs.push_back(std::async(std::launch::async, [&bundle, n] { return isolate_roots(bundle.W(n), n); }));
  }
  std::vector<RootReport> out(1);
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

CaseReport verify_theorem(const Params& params, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 1");
  const Landmarks lm = compute_landmarks(params);
  const SequenceBundle bundle = generate(params, std::max(n_max, 3));
  const std::vector<RootReport> reports = isolate_sequence(bundle);

  CaseReport out;
  out.params = params;
  out.n_max = n_max;
  out.tag = classify_case(lm, reports[3]);
  if (out.tag.gap) {
    throw Error(ErrorKind::UnsupportedCase,
                "c^- < c < c^+: no theorem clause applies to " + params.to_string() + "; use the scan command");
  }
  if (!out.tag.case_i && !out.tag.case_ii) {
    throw Error(ErrorKind::UnsupportedCase, "parameters fall in no theorem clause: " + params.to_string());
  }
  const auto bounds = out.tag.case_iii ? w3_bounds(reports[3]) : std::nullopt;

  std::vector<IntervalCounts> counts(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    counts[static_cast<std::size_t>(n)] = interval_counts(reports[static_cast<std::size_t>(n)], lm, out.tag,
                                                          bounds ? &*bounds : nullptr);
    out.counts.push_back(counts[static_cast<std::size_t>(n)]);
  }
  auto check = [&out](std::string name, int n, bool pass, std::string detail, bool info = false) {
    out.checks.push_back({std::move(name), n, pass, std::move(detail), info});
  };
  auto report_of = [&reports](int n) -> const RootReport& { return reports[static_cast<std::size_t>(n)]; };
  auto real_rooted = [&](int n) {
    const auto& r = report_of(n);
    check("real-rooted", n, r.real_rooted(), std::to_string(r.n_nonreal) + " non-real zeros");
  };
  const Interval* pieces[] = {&lm.J1, &lm.J2, &lm.J3, &lm.J4};
  auto pair = [&](int hi, int lo) {
    for (const Interval* iv : pieces) out.verdicts.push_back(check_pair_interlacing(report_of(hi), report_of(lo), *iv));
  };
  auto zero_ref = [&](int n, const std::vector<std::size_t>& idx) {
    return refs(report_of(n), idx).front();
  };

  if (out.tag.case_i) {
    const bool j3_possible = lm.delta_Delta > lm.delta_g && lm.n_plus.has_value();
    for (int n = 1; n <= n_max; ++n) {
      const auto& c = counts[static_cast<std::size_t>(n)];
      real_rooted(n);
      check("|R_n^J1| = floor((n-1)/2)", n, c.J1 == (n - 1) / 2, counts_detail("J1", c.J1, (n - 1) / 2));
      check("|R_n^(J2 u J3)| = floor(n/2)", n, c.J23 == n / 2, counts_detail("J2uJ3", c.J23, n / 2));
      check("|R_n^J4| = 1", n, c.J4 == 1, counts_detail("J4", c.J4, 1));
      const int expected_j3 = j3_possible && compare(QuadNum(n), *lm.n_plus) >= 0 ? 1 : 0;
      check("|R_n^J3| three-way rule", n, c.J3 == expected_j3, counts_detail("J3", c.J3, expected_j3));
      if (n >= 2) {
        const int step = c.J3 - counts[static_cast<std::size_t>(n - 1)].J3;
        check("|R_n^J3| - |R_{n-1}^J3| <= 1", n, step <= 1, "increment " + std::to_string(step));
      }
    }
    for (int n = 1; n + 1 <= n_max; ++n) pair(n + 1, n);
    for (int m = 1; 2 * m + 2 <= n_max; ++m) pair(2 * m + 2, 2 * m);
    for (int m = 1; 2 * m + 1 <= n_max; ++m) pair(2 * m + 1, 2 * m - 1);

    std::vector<int> n3, n4;
    std::vector<RootRef> z3, z4;
    for (int n = 1; n <= n_max; ++n) {
      const auto i3 = roots_in(report_of(n), lm.J3);
      if (i3.size() == 1) {
        n3.push_back(n);
        z3.push_back(zero_ref(n, i3));
      }
      const auto i4 = roots_in(report_of(n), lm.J4);
      if (i4.size() == 1) {
        n4.push_back(n);
        z4.push_back(zero_ref(n, i4));
      }
    }
    out.traces.push_back(make_trace("J3", "increasing", n3, z3));
    out.traces.push_back(make_trace("J4", "decreasing", n4, z4));
  }

  if (out.tag.case_ii) {
    for (int m = 2; m <= n_max; m += 2) {
      const int n = m / 2;
      const auto& c = counts[static_cast<std::size_t>(m)];
      real_rooted(m);
      check("|R_2n^J1| = n - 1", m, c.J1 == n - 1, counts_detail("J1", c.J1, n - 1));
      check("|R_2n^J2| = n - 1", m, c.J2 == n - 1, counts_detail("J2", c.J2, n - 1));
      check("|R_2n^J3| = 1", m, c.J3 == 1, counts_detail("J3", c.J3, 1));
      check("|R_2n^J4| = 1", m, c.J4 == 1, counts_detail("J4", c.J4, 1));
    }
    for (int m = 2; m + 2 <= n_max; m += 2) pair(m + 2, m);

    std::vector<int> n3, n4;
    std::vector<RootRef> z3, z4;
    for (int m = 2; m <= n_max; m += 2) {
      const auto i3 = roots_in(report_of(m), lm.J3);
      const auto i4 = roots_in(report_of(m), lm.J4);
      if (i3.size() == 1) {
        n3.push_back(m);
        z3.push_back(zero_ref(m, i3));
      }
      if (i4.size() == 1) {
        n4.push_back(m);
        z4.push_back(zero_ref(m, i4));
      }
    }
    out.traces.push_back(make_trace("J3 (even n)", "increasing", n3, z3));
    out.traces.push_back(make_trace("J4 (even n)", "decreasing", n4, z4));
  }

  if (out.tag.case_iii && bounds) {
    for (int m = 5; m <= n_max; m += 2) {
      const int n = (m - 1) / 2;
      const auto& c = counts[static_cast<std::size_t>(m)];
      real_rooted(m);
      check("|R_2n+1^J1| = n", m, c.J1 == n, counts_detail("J1", c.J1, n));
      check("|R_2n+1^J2| = n - 1", m, c.J2 == n - 1, counts_detail("J2", c.J2, n - 1));
      check("|R_2n+1^(J1 u J2)| = 2n - 1", m, c.J1 + c.J2 == 2 * n - 1,
            counts_detail("J1uJ2", c.J1 + c.J2, 2 * n - 1));
      check("printed split |R^J1| = n - 1, |R^J2| = n", m, c.J1 == n - 1 && c.J2 == n,
            "observed J1 = " + std::to_string(c.J1) + ", J2 = " + std::to_string(c.J2), true);
      check("|R_2n+1^I3| = 1", m, c.I3.value_or(-1) == 1, counts_detail("I3", c.I3.value_or(-1), 1));
      check("|R_2n+1^I4| = 1", m, c.I4.value_or(-1) == 1, counts_detail("I4", c.I4.value_or(-1), 1));
    }
    for (int n = 1; n + 1 <= n_max; ++n) pair(n + 1, n);
    for (int m = 1; 2 * m + 1 <= n_max; ++m) pair(2 * m + 1, 2 * m - 1);

    std::vector<int> n3, n4;
    std::vector<RootRef> z3, z4;
    for (int m = 5; m <= n_max; m += 2) {
      const auto i3 = roots_in_i(report_of(m), lm, *bounds, 3);
      const auto i4 = roots_in_i(report_of(m), lm, *bounds, 4);
      if (i3.size() == 1) {
        n3.push_back(m);
        z3.push_back(zero_ref(m, i3));
      }
      if (i4.size() == 1) {
        n4.push_back(m);
        z4.push_back(zero_ref(m, i4));
      }
    }
    out.traces.push_back(make_trace("I3 (odd n)", "decreasing", n3, z3));
    out.traces.push_back(make_trace("I4 (odd n)", "increasing", n4, z4));
  }
  return out;
}

bool W3Analysis::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.informational || c.pass; });
}

W3Analysis analyze_w3(const Params& params) {
  const Landmarks lm = compute_landmarks(params);
  if (compare(QuadNum(params.c), lm.c_plus) < 0) {
    throw Error(ErrorKind::NotApplicable, "W_3 analysis needs c >= c^+ (" + params.to_string() + ")");
  }
  W3Analysis out;
  out.params = params;
  out.w3 = generate(params, 3).W(3);
  out.roots = isolate_roots(out.w3, 3);
  out.n_real = out.roots.n_real_with_mult;
  out.n_nonreal = out.roots.n_nonreal;
  for (const auto& iv : out.roots.real_roots) {
    const double x = approximate_root(iv, *out.roots.chain, pow10(-18)).to_double();
    for (int k = 0; k < iv.multiplicity; ++k) out.approx.push_back(x);
  }
  auto check = [&out](std::string name, bool pass, std::string detail, bool info = false) {
    out.checks.push_back({std::move(name), 3, pass, std::move(detail), info});
  };

  const Interval negatives{"(-inf, 0)", Endpoint::neg_inf(), 0L, false, false, false};
  const Interval positives{"(0, +inf)", 0L, Endpoint::pos_inf(), false, false, false};
  out.n_negative = count_in(out.roots, negatives);
  const int n_positive = count_in(out.roots, positives);
  check("unique negative zero", out.n_negative == 1, std::to_string(out.n_negative) + " negative zeros");
  out.zero_in_delta_minus_xa = count_in(out.roots, lm.J1) >= 1;
  check("zero in (x_Delta^-, x_A)", out.zero_in_delta_minus_xa, std::to_string(count_in(out.roots, lm.J1)) + " zeros");
  check("W_3(0) = bd != 0", out.w3.coeff(0) == params.b * params.d && !out.w3.coeff(0).is_zero(),
        "W_3(0) = " + out.w3.coeff(0).to_string());
  out.positive_in_jg = w3_zeros_in_jg(lm, out.roots);
  out.positive_outside_jg = n_positive > out.positive_in_jg;
  check("both positive zeros in J_g", out.positive_in_jg >= 2,
        std::to_string(out.positive_in_jg) + " zeros in J_g", true);

  if (out.positive_outside_jg) {
    const Rational a1 = params.a + Rational(1);
    check("a > -1", a1.sign() > 0, "a = " + params.a.to_string());
    if (!a1.is_zero() && lm.x_0) {
      const Rational left = -params.b / a1;
      const Interval window{"(-b/(a+1), x_0)", left, *lm.x_0, false, false, false};
      const int inside = compare(QuadNum(left), *lm.x_0) < 0 ? count_in(out.roots, window) : 0;
      check("two zeros in (-b/(a+1), x_0)", inside == 2, std::to_string(inside) + " zeros in window");
      check("x_0 < x_Delta^+", compare(*lm.x_0, lm.x_Delta_plus) < 0,
            "x_0 ~ " + fmt(lm.x_0->to_double()) + ", x_Delta^+ ~ " + fmt(lm.x_Delta_plus.to_double()));
      const Rational bound = params.b / a1 + a1 * params.d / params.b;
      check("c < b/(a+1) + (a+1)d/b", params.c < bound, "bound = " + bound.to_string());
    } else {
      check("two zeros in (-b/(a+1), x_0)", false,
            a1.is_zero() ? "a = -1: window undefined" : "x_0 absent: " + lm.x_0_absent_reason);
    }
    check("c^- < 0", lm.c_minus.sign() < 0, "c^- ~ " + fmt(lm.c_minus.to_double()));
  }

  if (out.n_real == 3) {
    const double a2 = (params.a * params.a).to_double();
    const double U = (Rational(2) * params.a * params.b + params.a * params.c + params.c).to_double();
    const double V = (params.a * params.d + params.b * params.c + params.b * params.b + params.d).to_double();
    const double bd = (params.b * params.d).to_double();
    const auto& x = out.approx;
    auto close = [](double got, double want) { return std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)); };
    const double s1 = x[0] + x[1] + x[2];
    const double s2 = x[0] * x[1] + x[0] * x[2] + x[1] * x[2];
    const double s3 = x[0] * x[1] * x[2];
    check("x1 + x2 + x3 = -(2ab + ac + c)/a^2", close(s1, -U / a2), fmt(s1) + " vs " + fmt(-U / a2));
    check("x1x2 + x1x3 + x2x3 = (ad + bc + b^2 + d)/a^2", close(s2, V / a2), fmt(s2) + " vs " + fmt(V / a2));
    check("x1x2x3 = -bd/a^2", close(s3, -bd / a2), fmt(s3) + " vs " + fmt(-bd / a2));
    // bd > 0 here, so the product is negative; the usable consequence is x2 x3 > 0.
    check("x2, x3 share a sign", x[1] * x[2] > 0, fmt(x[1]) + ", " + fmt(x[2]));
    check("printed sign: -bd/a^2 > 0", -bd / a2 > 0, "-bd/a^2 = " + fmt(-bd / a2), true);
  }
  return out;
}

}  // namespace pwz
