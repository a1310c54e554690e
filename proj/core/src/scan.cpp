#include "pwz/scan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "pwz/bivariate.hpp"
#include "pwz/error.hpp"
#include "pwz/serialize.hpp"

namespace pwz {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rational draw(std::mt19937_64& rng, const ParamRange& range, long max_den) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const long den = den_dist(rng);
    const Rational lo = ceil(range.lo * Rational(den));
    const Rational hi = floor(range.hi * Rational(den));
    if (lo > hi) continue;
    std::uniform_int_distribution<long> num_dist(lo.numerator().get_si(), hi.numerator().get_si());
    const long num = num_dist(rng);
    if (num == 0) continue;
    return Rational(num, den);
  }
  throw Error(ErrorKind::InvalidArgument, "parameter range too narrow for the denominator bound");
}

void check_range(const char* name, const ParamRange& r, int required_sign) {
  if (r.lo > r.hi) throw Error(ErrorKind::InvalidArgument, std::string(name) + "_min > " + name + "_max");
  const bool ok = required_sign < 0 ? r.hi.sign() < 0 : r.lo.sign() > 0;
  if (!ok) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("range for ") + name + (required_sign < 0 ? " must lie below 0" : " must lie above 0"));
  }
}

std::string trim(std::string s) {
  const auto ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "config key '" + key + "' expects an integer, got '" + value + "'");
  }
}

}  // namespace

void SweepConfig::validate() const {
  check_range("a", a, -1);
  check_range("b", b, -1);
  check_range("c", c, 1);
  check_range("d", d, -1);
  if (max_den < 1) throw Error(ErrorKind::InvalidArgument, "max_den must be >= 1");
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 1");
  if (samples < 0) throw Error(ErrorKind::InvalidArgument, "samples must be >= 0");
  if (workers < 0) throw Error(ErrorKind::InvalidArgument, "workers must be >= 0");
}

SweepConfig parse_sweep_config(const std::string& text) {
  SweepConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::Parse, "config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "a_min") cfg.a.lo = Rational::parse(value);
    else if (key == "a_max") cfg.a.hi = Rational::parse(value);
    else if (key == "b_min") cfg.b.lo = Rational::parse(value);
    else if (key == "b_max") cfg.b.hi = Rational::parse(value);
    else if (key == "c_min") cfg.c.lo = Rational::parse(value);
    else if (key == "c_max") cfg.c.hi = Rational::parse(value);
    else if (key == "d_min") cfg.d.lo = Rational::parse(value);
    else if (key == "d_max") cfg.d.hi = Rational::parse(value);
    else if (key == "max_den") cfg.max_den = parse_long(key, value);
    else if (key == "n_max") cfg.n_max = static_cast<int>(parse_long(key, value));
    else if (key == "samples") cfg.samples = parse_long(key, value);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_long(key, value));
    else if (key == "workers") cfg.workers = static_cast<int>(parse_long(key, value));
    else if (key == "out") cfg.out = value;
    else throw Error(ErrorKind::Parse, "config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sweep_config(buf.str());
}

Params draw_params(const SweepConfig& config, long index) {
  std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(static_cast<std::uint64_t>(index))));
  Params p;
  p.a = draw(rng, config.a, config.max_den);
  p.b = draw(rng, config.b, config.max_den);
  p.c = draw(rng, config.c, config.max_den);
  p.d = draw(rng, config.d, config.max_den);
  return p;
}

SweepRecord evaluate_sample(const Params& params, int n_max, long index) {
  SweepRecord rec;
  rec.index = index;
  rec.params = params;
  try {
    params.require_regime();
    const SequenceBundle bundle = generate(params, std::max(n_max, 3));
    const Landmarks lm = compute_landmarks(params);
    const CaseTag tag = classify_case(lm, isolate_roots(bundle.W(3), 3));
    rec.case_label = tag.label();
    for (int n = 1; n <= n_max; ++n) {
      const int nonreal = n - real_root_count(bundle.W(n));
      rec.nonreal.push_back(nonreal);
      rec.max_nonreal = std::max(rec.max_nonreal, nonreal);
      if (nonreal > 2) rec.violation = true;
      const bool claimed = tag.case_i || (tag.case_ii && n % 2 == 0) || (tag.case_iii && n % 2 == 1);
      if (claimed && nonreal != 0) rec.theorem_consistent = false;
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.nonreal.clear();
    rec.max_nonreal = 0;
    rec.violation = false;
  }
  return rec;
}

SweepResult scan_conjecture(const SweepConfig& config) {
  config.validate();
  SweepResult result;
  result.summary.seed = config.seed;
  result.summary.n_max = config.n_max;
  result.records.resize(static_cast<std::size_t>(config.samples));

  std::ofstream log;
  if (!config.out.empty()) {
    log.open(config.out, std::ios::out | std::ios::trunc);
    if (!log) throw Error(ErrorKind::Io, "cannot open record log " + config.out);
  }

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = config.workers > 0 ? static_cast<unsigned>(config.workers) : hw;
  constexpr long kBatch = 64;
  for (long start = 0; start < config.samples; start += kBatch) {
    const long stop = std::min(config.samples, start + kBatch);
    std::atomic<long> next{start};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<unsigned>(workers, static_cast<unsigned>(stop - start)); ++w) {
      pool.emplace_back([&] {
        for (long i = next++; i < stop; i = next++) {
          result.records[static_cast<std::size_t>(i)] = evaluate_sample(draw_params(config, i), config.n_max, i);
        }
      });
    }
    for (auto& t : pool) t.join();
    if (log.is_open()) {
      for (long i = start; i < stop; ++i) log << record_json(result.records[static_cast<std::size_t>(i)]).dump() << '\n';
      log.flush();
      if (!log) {
        throw Error(ErrorKind::Io, "write to " + config.out + " failed after " + std::to_string(start) +
                                       " complete records");
      }
    }
  }

  auto& s = result.summary;
  for (const auto& r : result.records) {
    ++s.samples;
    if (r.error) {
      ++s.errors;
      continue;
    }
    if (r.violation) ++s.violations;
    if (!r.theorem_consistent) ++s.inconsistent;
    if (std::any_of(r.nonreal.begin(), r.nonreal.end(), [](int k) { return k % 2 != 0; })) ++s.odd_nonreal;
    ++s.by_case[r.case_label];
    auto& m = s.max_nonreal_by_case[r.case_label];
    m = std::max(m, r.max_nonreal);
  }
  return result;
}

CStarResult compute_c_star(const Rational& a, const Rational& b, const Rational& d, int n_max) {
  if (a.sign() >= 0 || b.sign() >= 0 || d.sign() >= 0) {
    throw Error(ErrorKind::Regime, "c* needs a, b, d < 0");
  }
  if (a == Rational(-1)) {
    throw Error(ErrorKind::UnsupportedCase, "c* is undefined for a = -1 (the b/(a+1) term)");
  }
  if (n_max < 3) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 3");
  CStarResult out;
  out.a = a;
  out.b = b;
  out.d = d;
  out.n_max = n_max;

  // W_n over Q[c][z].
  const ParamPoly A({Poly::constant(b), Poly::constant(a)});
  const ParamPoly B({Poly::constant(d), Poly::identity()});
  ParamPoly prev = ParamPoly::constant(Poly::constant(1));
  ParamPoly cur({Poly(), Poly::constant(1)});
  for (int n = 2; n <= 3; ++n) {
    ParamPoly next = A * cur + B * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  out.discriminant = discriminant(cur);
  if (out.discriminant.degree() < 1) throw Error(ErrorKind::Internal, "discriminant of W_3 is constant in c");

  const RootReport disc_roots = isolate_roots(out.discriminant);
  out.discriminant_roots = disc_roots.real_roots;
  out.c_plus = QuadNum(-b, 2, d * (a - Rational(1)));
  const Rational a1 = a + Rational(1);
  out.third = b / a1 + a1 * d / b;

  QuadNum best = out.c_plus;
  out.which = "c+";
  if (compare(QuadNum(out.third), best) > 0) {
    best = QuadNum(out.third);
    out.which = "third";
  }
  if (!disc_roots.real_roots.empty()) {
    out.N = disc_roots.real_roots.back();
    if (compare_root_to_point(*out.N, *disc_roots.chain, Endpoint(best)) > 0) out.which = "N";
  }

  const Rational eps(1, 1000000);
  if (out.which == "N") {
    const IsolatingInterval tight = refine(*out.N, *disc_roots.chain, eps);
    out.upper = tight.hi;
  } else {
    out.exact = best;
    out.upper = best.is_rational() ? best.p() : best.approx(eps) + eps;
  }
  out.sample_c = out.upper + Rational(1);

  const Params sample{a, b, out.sample_c, d};
  const SequenceBundle bundle = generate(sample, n_max);
  out.sample_case = classify_case(compute_landmarks(sample), isolate_roots(bundle.W(3), 3));
  out.verified = true;
  for (int n = 1; n <= n_max; ++n) {
    const int nonreal = n - real_root_count(bundle.W(n));
    out.sample_nonreal.push_back(nonreal);
    if (nonreal != 0) out.verified = false;
  }
  return out;
}

}  // namespace pwz
