#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwz/isolate.hpp"
#include "pwz/quadnum.hpp"
#include "pwz/sequence.hpp"
#include "pwz/sturm.hpp"

namespace pwz {

/// Interval of the extended real line with exact endpoints.
struct Interval {
  std::string name;
  Endpoint lo = Endpoint::neg_inf();
  Endpoint hi = Endpoint::pos_inf();
  bool lo_closed = false;
  bool hi_closed = false;
  bool empty = false;

  bool contains(const QuadNum& x) const;
  std::string to_string() const;
};

/// Cutting points, thresholds and intervals attached to one parameter tuple.
struct Landmarks {
  Params params;
  Rational x_A;
  Rational x_B;
  Rational delta_Delta;
  Rational delta_g;
  QuadNum x_Delta_minus;
  QuadNum x_Delta_plus;
  QuadNum c_minus;
  QuadNum c_plus;
  std::optional<QuadNum> x_g_minus;
  std::optional<QuadNum> x_g_plus;
  std::optional<QuadNum> n_plus;
  std::optional<QuadNum> x_0;
  std::string x_g_absent_reason;
  std::string n_plus_absent_reason;
  std::string x_0_absent_reason;

  Interval J1;
  Interval J2;
  Interval J3;
  Interval J4;
  std::optional<Interval> Jg;
};

/// Requires the regime a, b, d < 0 < c (ErrorKind::Regime otherwise).
Landmarks compute_landmarks(const Params& params);

struct CaseTag {
  bool case_i = false;     // c <= c^-
  bool case_ii = false;    // c >= c^+, even degrees
  bool case_iii = false;   // c > c^+ and the W_3 witness, odd degrees
  bool gap = false;        // c^- < c < c^+
  bool boundary = false;   // c equals c^- or c^+ exactly
  // Set whenever c > c^+: do the two largest zeros of W_3 lie in J_g?
  std::optional<bool> w3_in_jg;

  std::string label() const;
};

/// Exact classification. `w3` must be the root report of W_3 for these
/// parameters; it is only consulted when c > c^+.
CaseTag classify_case(const Landmarks& landmarks, const RootReport& w3);
CaseTag classify_case(const Params& params);

/// Zeros of W_3 (with multiplicity) inside the open interval J_g.
int w3_zeros_in_jg(const Landmarks& landmarks, const RootReport& w3);

struct SignCheck {
  std::string law;
  int n = 0;  // 0 for order relations that do not depend on n
  bool pass = false;
  std::string detail;
};

struct SignLemmaReport {
  CaseTag tag;
  std::vector<SignCheck> checks;

  bool all_pass() const;
  const SignCheck* first_failure() const;
};

/// Sign and order facts at the landmark points for 1 <= n <= n_max.
SignLemmaReport check_sign_lemma(const Params& params, int n_max);

/// W_n(x_g^+-) == (x_g^+-)^n; throws ErrorKind::NotApplicable when x_g^+- are not real.
bool check_xg_identity(const SequenceBundle& bundle, const Landmarks& landmarks);

/// Position of every isolated root of `report` relative to `iv`, decided
/// exactly from Sturm counts at the endpoints. Returns the indices (into
/// report.real_roots) of the roots inside.
std::vector<std::size_t> roots_in(const RootReport& report, const Interval& iv);

/// Number of zeros with multiplicity inside `iv`.
int count_in(const RootReport& report, const Interval& iv);

}  // namespace pwz
