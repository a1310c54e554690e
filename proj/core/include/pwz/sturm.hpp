#pragma once

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pwz/poly.hpp"
#include "pwz/quadnum.hpp"

namespace pwz {

/// A point of the extended real line: -inf, +inf, or an exact quadratic number.
class Endpoint {
 public:
  Endpoint(const QuadNum& value) : kind_(Kind::Finite), value_(value) {}  // NOLINT
  Endpoint(const Rational& value) : kind_(Kind::Finite), value_(value) {}  // NOLINT
  Endpoint(long value) : kind_(Kind::Finite), value_(value) {}             // NOLINT

  static Endpoint neg_inf() { return Endpoint(Kind::NegInf); }
  static Endpoint pos_inf() { return Endpoint(Kind::PosInf); }

  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  const QuadNum& value() const { return value_; }

  std::string to_string() const;
  double to_double() const;

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit Endpoint(Kind kind) : kind_(kind) {}

  Kind kind_;
  QuadNum value_;
};

int compare(const Endpoint& x, const Endpoint& y);

/// Signed remainder sequence p0 = squarefree part of p, p1 = p0', ...,
/// each member scaled by a positive constant to a primitive integer
/// polynomial. Members are stored twice: as Poly for exact evaluation at
/// quadratic points, and as integer vectors for fast evaluation at rationals.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);

  const Poly& base() const noexcept { return polys_.front(); }
  std::span<const Poly> polys() const noexcept { return polys_; }
  std::size_t size() const noexcept { return polys_.size(); }

  /// Number of sign variations of the chain at x, zeros skipped.
  int variations(const Endpoint& x) const;
  int variations(const Rational& x) const;

  /// Distinct real roots of base() in (lo, hi]; requires lo < hi.
  int count(const Endpoint& lo, const Endpoint& hi) const;
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }
  /// Distinct real roots <= x.
  int count_le(const Endpoint& x) const { return variations(Endpoint::neg_inf()) - variations(x); }

  int base_sign_at(const Rational& x) const;

 private:
  int sign_of(std::size_t i, const Rational& x) const;

  std::vector<Poly> polys_;
  std::vector<std::vector<mpz_class>> integer_polys_;
};

/// Sturm count of distinct real roots in (lo, hi]; throws when lo >= hi.
int count_roots(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi);

}  // namespace pwz
