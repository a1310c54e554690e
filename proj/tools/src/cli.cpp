#include "pwz_cli/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <vector>

#include "pwz/error.hpp"
#include "pwz/interlace.hpp"
#include "pwz/repro.hpp"
#include "pwz/scan.hpp"
#include "pwz/serialize.hpp"

namespace pwz::cli {

namespace {

struct ParamText {
  std::string a, b, c, d;
};

void add_params(CLI::App* sub, ParamText& p, bool required = true) {
  auto* a = sub->add_option("--a", p.a, "coefficient a (decimal or fraction)");
  auto* b = sub->add_option("--b", p.b, "coefficient b");
  auto* c = sub->add_option("--c", p.c, "coefficient c");
  auto* d = sub->add_option("--d", p.d, "coefficient d");
  if (required) {
    for (auto* o : {a, b, c, d}) o->required();
  }
}

Params to_params(const ParamText& t) {
  return {Rational::parse(t.a), Rational::parse(t.b), Rational::parse(t.c), Rational::parse(t.d)};
}

int run_seq(const ParamText& pt, int n, bool as_json, std::ostream& out) {
  const Params params = to_params(pt);
  const SequenceBundle bundle = generate(params, n);
  if (as_json) {
    json polys = json::array();
    for (int k = 0; k <= n; ++k) {
      polys.push_back({{"n", k}, {"coeffs", poly_json(bundle.W(k))}, {"text", bundle.W(k).to_string()}});
    }
    out << json{{"params", params_json(params)}, {"n_max", n}, {"polys", polys}}.dump(2) << '\n';
  } else {
    for (int k = 0; k <= n; ++k) out << "W_" << k << " = " << bundle.W(k).to_string() << '\n';
  }
  return kPass;
}

int run_landmarks(const ParamText& pt, int digits, std::ostream& out) {
  const Params params = to_params(pt);
  const Landmarks lm = compute_landmarks(params);
  const CaseTag tag = classify_case(lm, isolate_roots(generate(params, 3).W(3), 3));
  out << landmarks_json(lm, tag, digits).dump(2) << '\n';
  return kPass;
}

int run_roots(const ParamText& pt, int n, const std::string& eps_text, const std::string& format, bool per_n,
              int digits, std::ostream& out) {
  const Params params = to_params(pt);
  const Rational eps = Rational::parse(eps_text);
  if (eps.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "--eps must be positive");
  const SequenceBundle bundle = generate(params, n);
  if (per_n) {
    out << "n,approx\n";
    for (const auto& r : isolate_sequence(bundle)) {
      for (const auto& iv : r.real_roots) {
        out << r.poly_id << ',' << approximate_root(iv, *r.chain, eps).to_decimal(digits) << '\n';
      }
    }
    return kPass;
  }
  const RootReport report = isolate_roots(bundle.W(n), n);
  if (format == "csv") {
    out << "n,index,lo,hi,approx,multiplicity\n";
    int index = 0;
    for (const auto& iv : report.real_roots) {
      const IsolatingInterval tight = refine(iv, *report.chain, eps);
      out << n << ',' << ++index << ',' << tight.lo.to_string() << ',' << tight.hi.to_string() << ','
          << tight.midpoint().to_decimal(digits) << ',' << iv.multiplicity << '\n';
    }
  } else {
    json j = root_report_json(report, eps, digits);
    j["params"] = params_json(params);
    out << j.dump(2) << '\n';
  }
  return kPass;
}

void print_checks(const std::vector<TheoremCheck>& checks, std::ostream& out) {
  int failed = 0;
  for (const auto& c : checks) {
    if (c.pass || c.informational) continue;
    if (++failed <= 10) out << "  FAIL n=" << c.n << "  " << c.name << ": " << c.detail << '\n';
  }
  if (failed > 10) out << "  ... " << failed - 10 << " more failures\n";
}

int run_verify(const ParamText& pt, int n_max, bool as_json, std::ostream& out) {
  const Params params = to_params(pt);
  const CaseReport theorem = verify_theorem(params, n_max);
  const SignLemmaReport signs = check_sign_lemma(params, n_max);
  const Landmarks lm = compute_landmarks(params);
  std::optional<W3Analysis> w3;
  if (compare(QuadNum(params.c), lm.c_plus) >= 0) w3 = analyze_w3(params);
  const bool pass = theorem.all_pass() && signs.all_pass() && (!w3 || w3->all_pass());

  if (as_json) {
    out << json{{"pass", pass},
                {"theorem", case_report_json(theorem)},
                {"sign_lemma", sign_report_json(signs)},
                {"w3", w3 ? w3_json(*w3) : json(nullptr)}}
               .dump(2)
        << '\n';
    return pass ? kPass : kCheckFailed;
  }

  auto tally = [](const auto& items, auto ok) {
    std::size_t good = 0;
    for (const auto& i : items) good += ok(i) ? 1 : 0;
    return std::to_string(good) + "/" + std::to_string(items.size());
  };
  out << params.to_string() << "  case " << theorem.tag.label() << "  n_max " << n_max << '\n';
  out << "theorem checks     " << tally(theorem.checks, [](const TheoremCheck& c) { return c.pass || c.informational; })
      << '\n';
  print_checks(theorem.checks, out);
  out << "interlacing pairs  " << tally(theorem.verdicts, [](const InterlacingVerdict& v) { return v.acceptable(); })
      << '\n';
  for (const auto& v : theorem.verdicts) {
    if (!v.acceptable()) {
      out << "  " << to_string(v.status) << " (W_" << v.p_id << ", W_" << v.q_id << ") on " << v.interval << ": "
          << v.witness << '\n';
    }
  }
  for (const auto& t : theorem.traces) {
    out << "trace " << std::left << std::setw(12) << t.zero << " printed " << t.printed << ", observed " << t.observed
        << (t.consistent ? "" : "  INCONSISTENT") << '\n';
  }
  out << "sign lemma         " << tally(signs.checks, [](const SignCheck& c) { return c.pass; }) << '\n';
  if (const SignCheck* f = signs.first_failure()) {
    out << "  FAIL n=" << f->n << "  " << f->law << ": " << f->detail << '\n';
  }
  if (w3) {
    out << "W_3 analysis       " << tally(w3->checks, [](const TheoremCheck& c) { return c.pass || c.informational; })
        << '\n';
    print_checks(w3->checks, out);
  }
  out << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kPass : kCheckFailed;
}

struct ScanOpts {
  std::string config;
  std::string out;
  std::optional<long> seed;
  std::optional<long> samples;
  std::optional<int> n_max;
  std::optional<int> workers;
  bool c_star = false;
  ParamText params;
  int digits = 6;
};

int run_scan(const ScanOpts& o, std::ostream& out) {
  if (o.c_star) {
    if (o.params.a.empty() || o.params.b.empty() || o.params.d.empty()) {
      throw Error(ErrorKind::InvalidArgument, "--c-star needs --a, --b and --d");
    }
    const CStarResult r = compute_c_star(Rational::parse(o.params.a), Rational::parse(o.params.b),
                                         Rational::parse(o.params.d), o.n_max.value_or(16));
    out << cstar_json(r, o.digits).dump(2) << '\n';
    return r.verified ? kPass : kCheckFailed;
  }
  SweepConfig cfg = o.config.empty() ? SweepConfig{} : load_sweep_config(o.config);
  if (!o.out.empty()) cfg.out = o.out;
  if (o.seed) cfg.seed = static_cast<std::uint64_t>(*o.seed);
  if (o.samples) cfg.samples = *o.samples;
  if (o.n_max) cfg.n_max = *o.n_max;
  if (o.workers) cfg.workers = *o.workers;
  const SweepResult result = scan_conjecture(cfg);
  out << summary_json(result.summary).dump(2) << '\n';
  const auto& s = result.summary;
  return s.violations == 0 && s.inconsistent == 0 && s.odd_nonreal == 0 ? kPass : kCheckFailed;
}

int run_repro_cmd(const std::string& id, bool all, bool as_json, std::ostream& out) {
  if (id.empty() == !all) throw Error(ErrorKind::InvalidArgument, "give exactly one of <id> or --all");
  std::vector<std::string> ids = all ? fixture_ids() : std::vector<std::string>{id};
  bool pass = true;
  json results = json::array();
  for (const auto& fid : ids) {
    const ReproResult r = run_repro(fid);
    pass = pass && r.all_pass();
    if (as_json) {
      results.push_back(repro_json(r));
      continue;
    }
    out << "fixture " << r.id << "  (" << r.title << ")  " << (r.all_pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& row : r.rows) {
      out << "  " << (row.pass ? "ok  " : "FAIL") << "  " << std::left << std::setw(50) << row.label << " expected "
          << std::setw(24) << row.expected << " computed " << row.computed;
      if (!row.tolerance.empty()) out << "  (tol " << row.tolerance << ")";
      out << '\n';
    }
  }
  if (as_json) out << json{{"pass", pass}, {"fixtures", results}}.dump(2) << '\n';
  return pass ? kPass : kCheckFailed;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact zeros, landmarks and interlacing checks for W_n = (az+b)W_{n-1} + (cz+d)W_{n-2}", "pwz"};
  app.require_subcommand(1);

  ParamText seq_p;
  int seq_n = 5;
  bool seq_json = false;
  auto* seq = app.add_subcommand("seq", "print W_0..W_N");
  add_params(seq, seq_p);
  seq->add_option("--n", seq_n, "largest index N")->check(CLI::Range(1, 400));
  seq->add_flag("--json", seq_json, "JSON output");

  ParamText lm_p;
  int lm_digits = 6;
  auto* lmk = app.add_subcommand("landmarks", "landmark points, thresholds and intervals as JSON");
  add_params(lmk, lm_p);
  lmk->add_option("--digits", lm_digits, "decimal places for approximations")->check(CLI::Range(0, 200));
  lmk->add_flag("--json", "accepted for uniformity; output is always JSON");

  ParamText roots_p;
  int roots_n = 1;
  std::string roots_eps = "1/10000000000";
  std::string roots_format = "json";
  bool roots_per_n = false;
  int roots_digits = 10;
  auto* roots = app.add_subcommand("roots", "isolate and refine the real zeros of W_n");
  add_params(roots, roots_p);
  roots->add_option("--n", roots_n, "index n")->required()->check(CLI::Range(1, 400));
  roots->add_option("--eps", roots_eps, "refinement width (decimal or fraction)");
  roots->add_option("--format", roots_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  roots->add_flag("--csv-per-n", roots_per_n, "CSV rows (n, approx) for every W_1..W_n");
  roots->add_option("--digits", roots_digits, "decimal places")->check(CLI::Range(0, 200));
  roots->add_flag("--json", [&roots_format](std::int64_t) { roots_format = "json"; }, "same as --format json");

  ParamText ver_p;
  int ver_n = 12;
  bool ver_json = false;
  auto* ver = app.add_subcommand("verify", "check the root-count, sign and interlacing theorems");
  add_params(ver, ver_p);
  ver->add_option("--n-max", ver_n, "largest degree checked")->check(CLI::Range(1, 200));
  ver->add_flag("--json", ver_json, "JSON output");

  ScanOpts scan_o;
  auto* scan = app.add_subcommand("scan", "seeded sweep for W_n with more than two non-real zeros, or c* (--c-star)");
  scan->add_option("--config", scan_o.config, "key=value sweep configuration file");
  scan->add_option("--out", scan_o.out, "JSON-lines record log");
  scan->add_option("--seed", scan_o.seed, "random seed");
  scan->add_option("--samples", scan_o.samples, "number of samples");
  scan->add_option("--n-max", scan_o.n_max, "largest degree per sample");
  scan->add_option("--workers", scan_o.workers, "worker threads (0 = all cores)");
  scan->add_flag("--c-star", scan_o.c_star, "compute the real-rootedness threshold c* for --a --b --d");
  add_params(scan, scan_o.params, false);
  scan->add_option("--digits", scan_o.digits, "decimal places in c* output");

  std::string repro_id;
  bool repro_all = false;
  bool repro_json_flag = false;
  auto* repro = app.add_subcommand("repro", "recompute a worked example and compare with the printed values");
  repro->add_option("id", repro_id, "fixture id: 3.1a 3.1b 3.2 5.3a 5.3b");
  repro->add_flag("--all", repro_all, "run every fixture");
  repro->add_flag("--json", repro_json_flag, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (seq->parsed()) return run_seq(seq_p, seq_n, seq_json, out);
    if (lmk->parsed()) return run_landmarks(lm_p, lm_digits, out);
    if (roots->parsed()) {
      return run_roots(roots_p, roots_n, roots_eps, roots_format, roots_per_n, roots_digits, out);
    }
    if (ver->parsed()) return run_verify(ver_p, ver_n, ver_json, out);
    if (scan->parsed()) return run_scan(scan_o, out);
    if (repro->parsed()) return run_repro_cmd(repro_id, repro_all, repro_json_flag, out);
  } catch (const Error& e) {
    err << "pwz: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::Internal ? kCheckFailed : kUsage;
  } catch (const std::exception& e) {
    err << "pwz: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace pwz::cli
