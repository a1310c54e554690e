#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwz/isolate.hpp"
#include "pwz/landmarks.hpp"
#include "pwz/sequence.hpp"

namespace pwz {

/// Isolating intervals of the zeros xi_{3,2} <= xi_{3,3} of W_3, used as the
/// algebraic endpoints of I3 = (x_g^-, xi_{3,2}) and I4 = (xi_{3,3}, x_g^+).
struct W3Bounds {
  IsolatingInterval xi2;
  IsolatingInterval xi3;
  std::shared_ptr<const SturmChain> chain;
};

/// Present when W_3 has three real zeros (with multiplicity).
std::optional<W3Bounds> w3_bounds(const RootReport& w3);

struct IntervalCounts {
  int n = 0;
  int J1 = 0;
  int J2 = 0;
  int J3 = 0;
  int J4 = 0;
  int J23 = 0;
  std::optional<int> Jg;
  std::optional<int> I3;
  std::optional<int> I4;
  int real = 0;  // with multiplicity
};

/// Zeros with multiplicity per landmark interval. I3/I4 are filled when
/// `w3` is given (case III).
IntervalCounts interval_counts(const RootReport& report, const Landmarks& landmarks, const CaseTag& tag,
                               const W3Bounds* w3 = nullptr);

/// Indices of the roots lying in I3 (which = 3) or I4 (which = 4).
std::vector<std::size_t> roots_in_i(const RootReport& report, const Landmarks& landmarks, const W3Bounds& w3,
                                    int which);

enum class InterlaceStatus { Strict, Weak, Fail, Degenerate };

std::string to_string(InterlaceStatus status);

struct InterlacingVerdict {
  int p_id = 0;
  int q_id = 0;
  std::string interval;
  InterlaceStatus status = InterlaceStatus::Fail;
  int p_count = 0;
  int q_count = 0;
  std::string witness;  // offending roots or explanation

  /// What the theorems assert: strict, or the degenerate singleton/empty cases.
  bool acceptable() const { return status == InterlaceStatus::Strict || status == InterlaceStatus::Degenerate; }
};

/// Interlacing of the zeros of p and q restricted to `iv`.
InterlacingVerdict check_pair_interlacing(const RootReport& p, const RootReport& q, const Interval& iv);

struct TheoremCheck {
  std::string name;
  int n = 0;
  bool pass = false;
  std::string detail;
  bool informational = false;  // reported, does not affect the verdict
};

struct MonotoneTrace {
  std::string zero;      // e.g. "J3" or "I4"
  std::string printed;   // direction asserted by the theorem
  std::string observed;  // "increasing", "decreasing", "mixed" or "n/a"
  std::vector<int> n;
  std::vector<double> value;
  bool consistent = false;
};

struct CaseReport {
  Params params;
  CaseTag tag;
  int n_max = 0;
  std::vector<IntervalCounts> counts;
  std::vector<TheoremCheck> checks;
  std::vector<InterlacingVerdict> verdicts;
  std::vector<MonotoneTrace> traces;

  bool all_pass() const;
};

/// Root reports of W_1..W_n_max computed in parallel (index n -> W_n; index 0 unused).
std::vector<RootReport> isolate_sequence(const SequenceBundle& bundle);

/// Checks every computable claim of the root-count and interlacing theorems
/// for the applicable degrees n <= n_max. Throws ErrorKind::UnsupportedCase in
/// the gap c^- < c < c^+.
CaseReport verify_theorem(const Params& params, int n_max);

struct W3Analysis {
  Params params;
  Poly w3;
  RootReport roots;
  int n_real = 0;
  int n_nonreal = 0;
  int n_negative = 0;
  bool zero_in_delta_minus_xa = false;  // a zero in (x_Delta^-, x_A)
  int positive_in_jg = 0;
  bool positive_outside_jg = false;
  std::vector<double> approx;  // real zeros, ascending
  std::vector<TheoremCheck> checks;

  bool all_pass() const;
};

/// Requires c >= c^+ (ErrorKind::NotApplicable otherwise).
W3Analysis analyze_w3(const Params& params);

}  // namespace pwz
