#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwz/isolate.hpp"
#include "pwz/landmarks.hpp"
#include "pwz/sequence.hpp"

namespace pwz {

/// Closed range [lo, hi] for one parameter; samples are num/den with
/// 1 <= den <= max_den.
struct ParamRange {
  Rational lo;
  Rational hi;
};

struct SweepConfig {
  ParamRange a{Rational(-5), Rational(-1, 100)};
  ParamRange b{Rational(-10), Rational(-1, 100)};
  ParamRange c{Rational(1, 100), Rational(30)};
  ParamRange d{Rational(-10), Rational(-1, 100)};
  long max_den = 1000;
  int n_max = 12;
  long samples = 500;
  std::uint64_t seed = 1;
  int workers = 0;  // 0: hardware concurrency
  std::string out;  // JSON-lines record log; empty for none

  /// Throws ErrorKind::InvalidArgument unless every range respects a, b, d < 0 < c.
  void validate() const;
};

/// Parses a key=value text file. Keys: a_min a_max b_min b_max c_min c_max
/// d_min d_max max_den n_max samples seed workers out. '#' starts a comment.
SweepConfig parse_sweep_config(const std::string& text);
SweepConfig load_sweep_config(const std::filesystem::path& path);

struct SweepRecord {
  long index = 0;
  Params params;
  std::vector<int> nonreal;  // nonreal[n - 1] for W_n, n = 1..n_max
  int max_nonreal = 0;
  std::string case_label;
  bool violation = false;            // some W_n has more than two non-real zeros
  bool theorem_consistent = true;    // counts agree with the applicable clause
  std::optional<std::string> error;  // per-sample computation failure
};

/// Deterministic parameter draw for sample `index`.
Params draw_params(const SweepConfig& config, long index);

/// Evaluates one parameter tuple; failures are captured in `error`.
SweepRecord evaluate_sample(const Params& params, int n_max, long index = 0);

struct SweepSummary {
  long samples = 0;
  long violations = 0;
  long errors = 0;
  long inconsistent = 0;
  long odd_nonreal = 0;
  std::map<std::string, long> by_case;
  std::map<std::string, int> max_nonreal_by_case;
  std::uint64_t seed = 0;
  int n_max = 0;
};

struct SweepResult {
  SweepSummary summary;
  std::vector<SweepRecord> records;
};

/// Runs the sweep across worker threads. Records are produced in index order
/// and appended to config.out (when set) by a single writer, so equal configs
/// give byte-identical logs.
SweepResult scan_conjecture(const SweepConfig& config);

struct CStarResult {
  Rational a;
  Rational b;
  Rational d;
  Poly discriminant;                 // of W_3 in z, as a polynomial in c
  std::vector<IsolatingInterval> discriminant_roots;
  std::optional<IsolatingInterval> N;  // largest real root
  QuadNum c_plus;
  Rational third;                    // b/(a+1) + (a+1)d/b
  std::string which;                 // "c+", "N" or "third"
  std::optional<QuadNum> exact;      // c* when it is c^+ or the third term
  Rational upper;                    // certified rational c* <= upper
  Rational sample_c;                 // upper + 1
  CaseTag sample_case;
  int n_max = 0;
  std::vector<int> sample_nonreal;   // W_1..W_n_max at sample_c
  bool verified = false;             // every W_n real-rooted at sample_c
};

/// Threshold above which every W_n is real-rooted. Requires a, b, d < 0 and
/// a != -1 (ErrorKind::UnsupportedCase for a = -1).
CStarResult compute_c_star(const Rational& a, const Rational& b, const Rational& d, int n_max = 16);

}  // namespace pwz
