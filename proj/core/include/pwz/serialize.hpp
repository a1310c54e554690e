#pragma once

#include <json.hpp>

#include "pwz/interlace.hpp"
#include "pwz/isolate.hpp"
#include "pwz/landmarks.hpp"
#include "pwz/poly.hpp"
#include "pwz/quadnum.hpp"
#include "pwz/repro.hpp"
#include "pwz/scan.hpp"
#include "pwz/sequence.hpp"

namespace pwz {

using json = nlohmann::json;

json rational_json(const Rational& x);
/// Ascending fraction strings.
json poly_json(const Poly& p);
json params_json(const Params& p);
/// {"exact", "p", "q", "D", "decimal"}
json quad_json(const QuadNum& x, int digits);
json endpoint_json(const Endpoint& e, int digits);
json interval_json(const Interval& iv, int digits);
json case_json(const CaseTag& tag);
json landmarks_json(const Landmarks& lm, const CaseTag& tag, int digits);
/// Refines each root to width <= eps before printing its midpoint.
json root_report_json(const RootReport& r, const Rational& eps, int digits);
json case_report_json(const CaseReport& r);
json sign_report_json(const SignLemmaReport& r);
json w3_json(const W3Analysis& w);
json record_json(const SweepRecord& r);
json summary_json(const SweepSummary& s);
json cstar_json(const CStarResult& c, int digits);
json repro_json(const ReproResult& r);

}  // namespace pwz
