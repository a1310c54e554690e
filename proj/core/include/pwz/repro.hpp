#pragma once

#include <string>
#include <vector>

#include "pwz/rational.hpp"
#include "pwz/sequence.hpp"

namespace pwz {

struct ReproRow {
  std::string label;     // e.g. "xi_{4,1}"
  std::string kind;      // "approx", "exact", "count", "case", "order"
  std::string expected;  // value as printed in the worked example
  std::string computed;
  std::string tolerance;  // empty unless kind == "approx"
  bool pass = false;
};

struct ReproResult {
  std::string id;
  std::string title;
  Params params;
  std::vector<ReproRow> rows;
  double seconds = 0.0;

  bool all_pass() const;
};

/// "3.1a", "3.1b", "3.2", "5.3a", "5.3b".
const std::vector<std::string>& fixture_ids();

/// Recomputes every quantity of a worked example and compares it with the
/// printed value, allowing one unit in the last printed decimal place.
/// Throws ErrorKind::InvalidArgument for an unknown id.
ReproResult run_repro(const std::string& id);

/// |x - printed| <= one unit in the last printed place, for a decimal literal.
Rational printed_tolerance(const std::string& printed);

}  // namespace pwz
