#include "pwz/isolate.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <utility>

#include "pwz/error.hpp"

namespace pwz {

namespace {

// A split point strictly inside (lo, hi) that is not a root of the chain base.
Rational split_point(const Rational& lo, const Rational& hi, const SturmChain& chain) {
  static const std::array<Rational, 7> kFractions = {Rational(1, 2), Rational(3, 8), Rational(5, 8),
                                                     Rational(1, 4), Rational(3, 4), Rational(1, 8),
                                                     Rational(7, 8)};
  const Rational width = hi - lo;
  for (const auto& f : kFractions) {
    Rational m = lo + width * f;
    if (chain.base_sign_at(m) != 0) return m;
  }
  // A polynomial of degree d has at most d roots; keep subdividing.
  for (long k = 9;; k += 2) {
    Rational m = lo + width * Rational(1, k);
    if (chain.base_sign_at(m) != 0) return m;
  }
}

int multiplicity_of(const IsolatingInterval& iv, const std::vector<std::pair<SturmChain, int>>& factors) {
  for (const auto& [chain, mult] : factors) {
    if (iv.is_exact() ? chain.base_sign_at(iv.lo) == 0 : chain.count(iv.lo, iv.hi) == 1) return mult;
  }
  throw Error(ErrorKind::Internal, "root not attributed to any square-free factor");
}

}  // namespace

Rational cauchy_bound(const Poly& p) {
  if (p.degree() < 1) return Rational(1);
  const Rational lead = p.leading().abs();
  Rational best;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = p.coeffs()[static_cast<std::size_t>(i)].abs() / lead;
    if (r > best) best = r;
  }
  return best + Rational(1);
}

RootReport isolate_roots(const Poly& p, int poly_id) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "root isolation needs degree >= 1");
  RootReport report;
  report.poly_id = poly_id;
  report.degree = p.degree();
  report.poly = p;
  auto chain = std::make_shared<const SturmChain>(p);
  report.chain = chain;

  const Rational bound = cauchy_bound(chain->base());
  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack;
  const int total = chain->count(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 1) {
      report.real_roots.push_back({cur.lo, cur.hi, poly_id, 1});
      continue;
    }
    const Rational mid = split_point(cur.lo, cur.hi, *chain);
    const int left = chain->count(cur.lo, mid);
    const int right = cur.count - left;
    if (right > 0) stack.push_back({mid, cur.hi, right});
    if (left > 0) stack.push_back({cur.lo, mid, left});
  }
  std::sort(report.real_roots.begin(), report.real_roots.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });

  if (chain->base().degree() == p.degree()) {
    report.n_real_with_mult = static_cast<int>(report.real_roots.size());
  } else {
    std::vector<std::pair<SturmChain, int>> factors;
    for (const auto& f : squarefree_decomposition(p).factors) factors.emplace_back(SturmChain(f.factor), f.multiplicity);
    for (auto& iv : report.real_roots) {
      iv.multiplicity = multiplicity_of(iv, factors);
      report.n_real_with_mult += iv.multiplicity;
    }
  }
  report.n_nonreal = report.degree - report.n_real_with_mult;
  return report;
}

int real_root_count(const Poly& p) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "root count needs degree >= 1");
  const SturmChain chain(p);
  if (chain.base().degree() == p.degree()) return chain.count(Endpoint::neg_inf(), Endpoint::pos_inf());
  int total = 0;
  for (const auto& f : squarefree_decomposition(p).factors) {
    if (f.factor.degree() < 1) continue;
    total += f.multiplicity * SturmChain(f.factor).count(Endpoint::neg_inf(), Endpoint::pos_inf());
  }
  return total;
}

void bisect_once(IsolatingInterval& iv, const SturmChain& chain) {
  if (iv.is_exact()) return;
  const Rational mid = iv.midpoint();
  const int sm = chain.base_sign_at(mid);
  if (sm == 0) {
    iv.lo = mid;
    iv.hi = mid;
    return;
  }
  // Simple roots of the square-free base change sign across the interval.
  if (sm == chain.base_sign_at(iv.lo)) {
    iv.lo = mid;
  } else {
    iv.hi = mid;
  }
}

IsolatingInterval refine(const IsolatingInterval& iv, const SturmChain& chain, const Rational& eps) {
  if (eps.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "refine needs eps > 0");
  IsolatingInterval out = iv;
  while (!out.is_exact() && out.width() > eps) bisect_once(out, chain);
  return out;
}

IsolatingInterval refine(const IsolatingInterval& iv, const Poly& p, const Rational& eps) {
  return refine(iv, SturmChain(p), eps);
}

Rational approximate_root(const IsolatingInterval& iv, const SturmChain& chain, const Rational& eps) {
  return refine(iv, chain, eps * Rational(2)).midpoint();
}

int compare_root_to_point(const IsolatingInterval& iv, const SturmChain& chain, const Endpoint& point) {
  if (point.is_neg_inf()) return 1;
  if (point.is_pos_inf()) return -1;
  const QuadNum& x = point.value();
  if (iv.is_exact()) return compare(QuadNum(iv.lo), x);
  if (compare(x, QuadNum(iv.lo)) <= 0) return 1;
  if (compare(x, QuadNum(iv.hi)) >= 0) return -1;
  if (chain.base().sign_at(x) == 0) return 0;
  return chain.count(Endpoint(iv.lo), point) == 1 ? -1 : 1;
}

int compare_roots(IsolatingInterval& a, const SturmChain& chain_a, IsolatingInterval& b,
                  const SturmChain& chain_b, int max_bisections) {
  std::optional<Poly> common;
  for (int step = 0; step <= max_bisections; ++step) {
    if (a.is_exact() && b.is_exact()) return a.lo == b.lo ? 0 : (a.lo < b.lo ? -1 : 1);
    // Non-exact intervals hold their root strictly inside, so touching hulls separate.
    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;
    if (a.is_exact()) return chain_b.base_sign_at(a.lo) == 0 ? 0 : compare_root_to_point(b, chain_b, a.lo) * -1;
    if (b.is_exact()) return chain_a.base_sign_at(b.lo) == 0 ? 0 : compare_root_to_point(a, chain_a, b.lo);

    if (step >= 8) {
      if (!common) common = gcd(chain_a.base(), chain_b.base());
      if (common->degree() >= 1) {
        const Rational lo = std::max(a.lo, b.lo);
        const Rational hi = std::min(a.hi, b.hi);
        if (SturmChain(*common).count(lo, hi) >= 1) return 0;
      }
    }
    if (a.width() >= b.width()) {
      bisect_once(a, chain_a);
    } else {
      bisect_once(b, chain_b);
    }
  }
  throw Error(ErrorKind::Internal, "root comparison did not separate within the bisection cap");
}

}  // namespace pwz
