#include "pwz/repro.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "pwz/error.hpp"
#include "pwz/interlace.hpp"
#include "pwz/isolate.hpp"
#include "pwz/landmarks.hpp"

namespace pwz {

namespace {

std::string decimal_of(const IsolatingInterval& iv, const SturmChain& chain, int digits) {
  return approximate_root(iv, chain, pow10(-(digits + 2))).to_decimal(digits);
}

int printed_digits(const std::string& printed) {
  const auto dot = printed.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

// Builds the rows of one fixture.
class Sheet {
 public:
  explicit Sheet(ReproResult& out) : out_(out) {}

  void root(const std::string& label, const RootReport& report, std::size_t index, const std::string& printed) {
    const Rational p = Rational::parse(printed);
    const Rational tol = printed_tolerance(printed);
    ReproRow row{label, "approx", printed, "", tol.to_decimal(printed_digits(printed)), false};
    if (index < report.real_roots.size()) {
      const auto& iv = report.real_roots[index];
      row.computed = decimal_of(iv, *report.chain, printed_digits(printed) + 3);
      row.pass = compare_root_to_point(iv, *report.chain, Endpoint(p - tol)) >= 0 &&
                 compare_root_to_point(iv, *report.chain, Endpoint(p + tol)) <= 0;
    } else {
      row.computed = "missing";
    }
    out_.rows.push_back(std::move(row));
  }

  void number(const std::string& label, const QuadNum& x, const std::string& printed) {
    const Rational p = Rational::parse(printed);
    const Rational tol = printed_tolerance(printed);
    const int digits = printed_digits(printed);
    out_.rows.push_back({label, "approx", printed, x.to_decimal(digits + 3), tol.to_decimal(digits),
                         compare(x, QuadNum(p - tol)) >= 0 && compare(x, QuadNum(p + tol)) <= 0});
  }

  void exact(const std::string& label, const QuadNum& x, const std::string& expected) {
    out_.rows.push_back({label, "exact", expected, x.to_string(), "", x == QuadNum(Rational::parse(expected))});
  }

  void text(const std::string& label, const std::string& kind, const std::string& expected,
            const std::string& computed) {
    out_.rows.push_back({label, kind, expected, computed, "", expected == computed});
  }

  void flag(const std::string& label, const std::string& kind, const std::string& expected, bool ok,
            const std::string& computed) {
    out_.rows.push_back({label, kind, expected, computed, "", ok});
  }

 private:
  ReproResult& out_;
};

Params ex31(const char* c) { return {Rational(-3), Rational(-5), Rational::parse(c), Rational(-1)}; }
Params ex32(const char* c) { return {Rational(-3, 10), Rational(-1), Rational::parse(c), Rational(-60)}; }

void zeros(Sheet& s, int n, const RootReport& r, const std::vector<std::string>& printed) {
  std::vector<std::pair<Rational, std::string>> sorted;
  for (const auto& p : printed) sorted.emplace_back(Rational::parse(p), p);
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r2) { return l.first < r2.first; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    s.root("xi_{" + std::to_string(n) + "," + std::to_string(i + 1) + "}", r, i, sorted[i].second);
  }
}

void w3_pair(Sheet& s, const RootReport& w3, const std::string& xi2, const std::string& xi3) {
  const std::size_t k = w3.real_roots.size();
  s.root("xi_{3,2}", w3, k >= 2 ? k - 2 : k, xi2);
  s.root("xi_{3,3}", w3, k >= 1 ? k - 1 : k, xi3);
}

void run_31a(ReproResult& out, Sheet& s) {
  out.title = "a=-3, b=-5, c=0.8, d=-1";
  out.params = ex31("0.8");
  const Landmarks lm = compute_landmarks(out.params);
  const auto bundle = generate(out.params, 4);
  s.exact("c^-", lm.c_minus, "1");
  s.exact("c^+", lm.c_plus, "9");
  s.exact("x_A", QuadNum(lm.x_A), "-5/3");
  s.text("W_4(0)", "exact", "-24", bundle.W(4).coeff(0).to_string());
  zeros(s, 4, isolate_roots(bundle.W(4), 4), {"-2.396", "-1.446", "-0.704", "-0.364"});
  s.text("case", "case", "CaseI", classify_case(lm, isolate_roots(bundle.W(3), 3)).label());
}

void run_31b(ReproResult& out, Sheet& s) {
  out.title = "a=-3, b=-5, c=10, d=-1";
  out.params = ex31("10");
  const Landmarks lm = compute_landmarks(out.params);
  const auto bundle = generate(out.params, 5);
  const RootReport w3 = isolate_roots(bundle.W(3), 3);
  s.text("W_3", "exact", "9z^3 + 10z^2 - 23z + 5", bundle.W(3).to_string());
  s.exact("x_g^-", *lm.x_g_minus, "1/4");
  s.exact("x_g^+", *lm.x_g_plus, "1");
  w3_pair(s, w3, "0.251", "0.955");
  zeros(s, 5, isolate_roots(bundle.W(5), 5), {"-15.70", "-1.962", "-0.534", "0.250", "0.999"});
  s.text("case", "case", "CaseII_even+CaseIII_odd", classify_case(lm, w3).label());
}

void run_32(ReproResult& out, Sheet& s) {
  out.title = "a=-0.3, b=-1, c=65, d=-60";
  out.params = ex32("65");
  const Landmarks lm = compute_landmarks(out.params);
  const auto bundle = generate(out.params, 5);
  const RootReport w3 = isolate_roots(bundle.W(3), 3);
  s.number("c^-", lm.c_minus, "-16.6");
  s.number("c^+", lm.c_plus, "18.6");
  s.number("x_g^-", *lm.x_g_minus, "0.956");
  w3_pair(s, w3, "1.014", "1.276");
  s.number("x_g^+", *lm.x_g_plus, "48.274");
  zeros(s, 5, isolate_roots(bundle.W(5), 5), {"-1844.053", "-1255.040", "0.912", "0.958", "4.352"});
  s.text("case", "case", "CaseII_even+CaseIII_odd", classify_case(lm, w3).label());
}

void run_53a(ReproResult& out, Sheet& s) {
  out.title = "a=-0.3, b=-1, c=20, d=-60";
  out.params = ex32("20");
  const Landmarks lm = compute_landmarks(out.params);
  const auto bundle = generate(out.params, 5);
  const RootReport w3 = isolate_roots(bundle.W(3), 3);
  zeros(s, 4, isolate_roots(bundle.W(4), 4), {"-423.39", "2.89", "3.67", "29.03"});
  const Rational left = -out.params.b / (out.params.a + Rational(1));
  s.number("-b/(a+1)", QuadNum(left), "1.42");
  w3_pair(s, w3, "1.61", "2.48");
  if (lm.x_0) {
    s.number("x_0", *lm.x_0, "2.82");
  } else {
    s.flag("x_0", "approx", "2.82", false, "absent");
  }
  const W3Analysis w3a = analyze_w3(out.params);
  bool chain_ok = w3a.positive_outside_jg;
  for (const auto& c : w3a.checks) {
    if (!c.informational && !c.pass) chain_ok = false;
  }
  s.flag("-b/(a+1) < xi_{3,2} < xi_{3,3} < x_0 < x_Delta^+", "order", "holds", chain_ok,
         chain_ok ? "holds" : "violated");
  const RootReport w5 = isolate_roots(bundle.W(5), 5);
  zeros(s, 5, w5, {"2.93", "-47.44", "-574.73"});
  s.text("W_5 non-real zeros", "count", "2", std::to_string(w5.n_nonreal));
  s.text("case", "case", "CaseII_even", classify_case(lm, w3).label());
}

void run_53b(ReproResult& out, Sheet& s) {
  out.title = "a=-0.3, b=-1, c=30, d=-60";
  out.params = ex32("30");
  const auto bundle = generate(out.params, 3);
  const RootReport w3 = isolate_roots(bundle.W(3), 3);
  s.text("W_3 real zeros", "count", "1", std::to_string(w3.n_real_with_mult));
  s.text("W_3 non-real zeros", "count", "2", std::to_string(w3.n_nonreal));
}

}  // namespace

bool ReproResult::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.pass; });
}

const std::vector<std::string>& fixture_ids() {
  static const std::vector<std::string> ids = {"3.1a", "3.1b", "3.2", "5.3a", "5.3b"};
  return ids;
}

Rational printed_tolerance(const std::string& printed) { return pow10(-printed_digits(printed)); }

ReproResult run_repro(const std::string& id) {
  static const std::map<std::string, std::function<void(ReproResult&, Sheet&)>> table = {
      {"3.1a", run_31a}, {"3.1b", run_31b}, {"3.2", run_32}, {"5.3a", run_53a}, {"5.3b", run_53b}};
  const auto it = table.find(id);
  if (it == table.end()) throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + id + "'");
  ReproResult out;
  out.id = id;
  Sheet sheet(out);
  const auto start = std::chrono::steady_clock::now();
  it->second(out, sheet);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace pwz
