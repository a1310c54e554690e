#include "pwz/serialize.hpp"

namespace pwz {

json rational_json(const Rational& x) { return x.to_string(); }

json poly_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

json params_json(const Params& p) {
  return {{"a", p.a.to_string()}, {"b", p.b.to_string()}, {"c", p.c.to_string()}, {"d", p.d.to_string()}};
}

json quad_json(const QuadNum& x, int digits) {
  return {{"exact", x.to_string()},
          {"p", x.p().to_string()},
          {"q", x.q().to_string()},
          {"D", x.radicand().to_string()},
          {"decimal", x.to_decimal(digits)}};
}

json endpoint_json(const Endpoint& e, int digits) {
  if (e.is_neg_inf()) return "-inf";
  if (e.is_pos_inf()) return "+inf";
  return quad_json(e.value(), digits);
}

json interval_json(const Interval& iv, int digits) {
  return {{"name", iv.name},
          {"lo", endpoint_json(iv.lo, digits)},
          {"hi", endpoint_json(iv.hi, digits)},
          {"lo_closed", iv.lo_closed},
          {"hi_closed", iv.hi_closed},
          {"empty", iv.empty}};
}

json case_json(const CaseTag& tag) {
  json out = {{"label", tag.label()},
              {"case_i", tag.case_i},
              {"case_ii_even", tag.case_ii},
              {"case_iii_odd", tag.case_iii},
              {"gap", tag.gap},
              {"boundary", tag.boundary},
              {"w3_in_jg", nullptr}};
  if (tag.w3_in_jg) out["w3_in_jg"] = *tag.w3_in_jg;
  return out;
}

json landmarks_json(const Landmarks& lm, const CaseTag& tag, int digits) {
  auto optional_quad = [digits](const std::optional<QuadNum>& x, const std::string& reason) -> json {
    if (x) return quad_json(*x, digits);
    return {{"absent", reason}};
  };
  json intervals = json::array(
      {interval_json(lm.J1, digits), interval_json(lm.J2, digits), interval_json(lm.J3, digits),
       interval_json(lm.J4, digits)});
  if (lm.Jg) intervals.push_back(interval_json(*lm.Jg, digits));
  return {{"params", params_json(lm.params)},
          {"digits", digits},
          {"x_A", quad_json(QuadNum(lm.x_A), digits)},
          {"x_B", quad_json(QuadNum(lm.x_B), digits)},
          {"delta_Delta", lm.delta_Delta.to_string()},
          {"delta_g", lm.delta_g.to_string()},
          {"x_Delta_minus", quad_json(lm.x_Delta_minus, digits)},
          {"x_Delta_plus", quad_json(lm.x_Delta_plus, digits)},
          {"c_minus", quad_json(lm.c_minus, digits)},
          {"c_plus", quad_json(lm.c_plus, digits)},
          {"x_g_minus", optional_quad(lm.x_g_minus, lm.x_g_absent_reason)},
          {"x_g_plus", optional_quad(lm.x_g_plus, lm.x_g_absent_reason)},
          {"n_plus", optional_quad(lm.n_plus, lm.n_plus_absent_reason)},
          {"x_0", optional_quad(lm.x_0, lm.x_0_absent_reason)},
          {"intervals", intervals},
          {"case", case_json(tag)}};
}

json root_report_json(const RootReport& r, const Rational& eps, int digits) {
  json roots = json::array();
  int index = 0;
  for (const auto& iv : r.real_roots) {
    const IsolatingInterval tight = refine(iv, *r.chain, eps);
    roots.push_back({{"index", ++index},
                     {"lo", tight.lo.to_string()},
                     {"hi", tight.hi.to_string()},
                     {"approx", tight.midpoint().to_decimal(digits)},
                     {"multiplicity", iv.multiplicity}});
  }
  return {{"n", r.poly_id},
          {"degree", r.degree},
          {"n_real", r.n_real_with_mult},
          {"n_nonreal", r.n_nonreal},
          {"roots", roots}};
}

namespace {

json check_json(const TheoremCheck& c) {
  return {{"name", c.name}, {"n", c.n}, {"pass", c.pass}, {"detail", c.detail}, {"informational", c.informational}};
}

json counts_json(const IntervalCounts& c) {
  json out = {{"n", c.n}, {"J1", c.J1}, {"J2", c.J2},   {"J3", c.J3},     {"J4", c.J4},
              {"J23", c.J23}, {"real", c.real}, {"Jg", nullptr}, {"I3", nullptr}, {"I4", nullptr}};
  if (c.Jg) out["Jg"] = *c.Jg;
  if (c.I3) out["I3"] = *c.I3;
  if (c.I4) out["I4"] = *c.I4;
  return out;
}

}  // namespace

json case_report_json(const CaseReport& r) {
  json counts = json::array();
  for (const auto& c : r.counts) counts.push_back(counts_json(c));
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"pair", {v.p_id, v.q_id}},
                        {"interval", v.interval},
                        {"status", to_string(v.status)},
                        {"counts", {v.p_count, v.q_count}},
                        {"witness", v.witness}});
  }
  json traces = json::array();
  for (const auto& t : r.traces) {
    traces.push_back({{"zero", t.zero},
                      {"printed", t.printed},
                      {"observed", t.observed},
                      {"consistent", t.consistent},
                      {"n", t.n},
                      {"value", t.value}});
  }
  return {{"params", params_json(r.params)},
          {"case", case_json(r.tag)},
          {"n_max", r.n_max},
          {"pass", r.all_pass()},
          {"counts", counts},
          {"checks", checks},
          {"verdicts", verdicts},
          {"traces", traces}};
}

json sign_report_json(const SignLemmaReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"law", c.law}, {"n", c.n}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return {{"case", case_json(r.tag)}, {"pass", r.all_pass()}, {"checks", checks}};
}

json w3_json(const W3Analysis& w) {
  json checks = json::array();
  for (const auto& c : w.checks) checks.push_back(check_json(c));
  return {{"params", params_json(w.params)},
          {"w3", poly_json(w.w3)},
          {"n_real", w.n_real},
          {"n_nonreal", w.n_nonreal},
          {"n_negative", w.n_negative},
          {"positive_in_jg", w.positive_in_jg},
          {"positive_outside_jg", w.positive_outside_jg},
          {"real_zeros", w.approx},
          {"pass", w.all_pass()},
          {"checks", checks}};
}

json record_json(const SweepRecord& r) {
  json out = {{"index", r.index},
              {"params", params_json(r.params)},
              {"case", r.case_label},
              {"nonreal", r.nonreal},
              {"max_nonreal", r.max_nonreal},
              {"violation", r.violation},
              {"theorem_consistent", r.theorem_consistent},
              {"error", nullptr}};
  if (r.error) out["error"] = *r.error;
  return out;
}

json summary_json(const SweepSummary& s) {
  return {{"samples", s.samples},
          {"violations", s.violations},
          {"errors", s.errors},
          {"inconsistent", s.inconsistent},
          {"odd_nonreal", s.odd_nonreal},
          {"by_case", s.by_case},
          {"max_nonreal_by_case", s.max_nonreal_by_case},
          {"seed", s.seed},
          {"n_max", s.n_max}};
}

json cstar_json(const CStarResult& c, int digits) {
  json roots = json::array();
  for (const auto& iv : c.discriminant_roots) roots.push_back({iv.lo.to_string(), iv.hi.to_string()});
  json out = {{"a", c.a.to_string()},
              {"b", c.b.to_string()},
              {"d", c.d.to_string()},
              {"discriminant", poly_json(c.discriminant)},
              {"discriminant_roots", roots},
              {"N", nullptr},
              {"c_plus", quad_json(c.c_plus, digits)},
              {"third", c.third.to_string()},
              {"which", c.which},
              {"exact", nullptr},
              {"upper", c.upper.to_string()},
              {"upper_decimal", c.upper.to_decimal(digits)},
              {"sample_c", c.sample_c.to_string()},
              {"sample_case", case_json(c.sample_case)},
              {"n_max", c.n_max},
              {"sample_nonreal", c.sample_nonreal},
              {"verified", c.verified}};
  if (c.N) out["N"] = {c.N->lo.to_string(), c.N->hi.to_string()};
  if (c.exact) out["exact"] = quad_json(*c.exact, digits);
  return out;
}

json repro_json(const ReproResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"label", row.label},
                    {"kind", row.kind},
                    {"expected", row.expected},
                    {"computed", row.computed},
                    {"tolerance", row.tolerance},
                    {"pass", row.pass}});
  }
  return {{"id", r.id},
          {"title", r.title},
          {"params", params_json(r.params)},
          {"pass", r.all_pass()},
          {"seconds", r.seconds},
          {"rows", rows}};
}

}  // namespace pwz
