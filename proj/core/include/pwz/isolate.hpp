#pragma once

#include <memory>
#include <vector>

#include "pwz/poly.hpp"
#include "pwz/rational.hpp"
#include "pwz/sturm.hpp"

namespace pwz {

/// Rational interval holding exactly one distinct real root of a polynomial.
/// Either lo < hi and the root lies in (lo, hi) with neither endpoint a root,
/// or lo == hi and the root is that rational.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int poly_id = 0;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Sorted, pairwise disjoint isolating intervals for every distinct real root
/// of one polynomial, plus the Sturm chain used to certify them.
struct RootReport {
  int poly_id = 0;
  int degree = 0;
  Poly poly;
  std::shared_ptr<const SturmChain> chain;  // on the squarefree part
  std::vector<IsolatingInterval> real_roots;
  int n_real_with_mult = 0;
  int n_nonreal = 0;

  bool real_rooted() const { return n_nonreal == 0; }
};

/// 1 + max |c_i / c_deg|; every complex root has modulus strictly below it.
Rational cauchy_bound(const Poly& p);

RootReport isolate_roots(const Poly& p, int poly_id = 0);

/// Real roots counted with multiplicity, without isolating them.
int real_root_count(const Poly& p);

/// Bisects until width <= eps, keeping the same root.
IsolatingInterval refine(const IsolatingInterval& iv, const SturmChain& chain, const Rational& eps);
IsolatingInterval refine(const IsolatingInterval& iv, const Poly& p, const Rational& eps);

/// One bisection step; no-op for exact intervals.
void bisect_once(IsolatingInterval& iv, const SturmChain& chain);

/// Exact position of the isolated root relative to a point: -1, 0 or +1.
int compare_root_to_point(const IsolatingInterval& iv, const SturmChain& chain, const Endpoint& point);

/// Exact order of two isolated roots of possibly different polynomials. Both
/// intervals are refined in place until they separate; equality is decided by
/// a common-factor test. Throws ErrorKind::Internal after `max_bisections`.
int compare_roots(IsolatingInterval& a, const SturmChain& chain_a, IsolatingInterval& b,
                  const SturmChain& chain_b, int max_bisections = 512);

/// Rational approximation of the root within eps (midpoint of a refined interval).
Rational approximate_root(const IsolatingInterval& iv, const SturmChain& chain, const Rational& eps);

}  // namespace pwz
