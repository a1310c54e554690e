#pragma once

#include <string>

#include "pwz/rational.hpp"

namespace pwz {

/// Exact real number p + q*sqrt(D) with rational p, q and D >= 0.
///
/// Canonical form: the radicand is a non-negative integer with small square
/// factors pulled out, perfect squares collapse into p, and q == 0 forces
/// D == 0. Arithmetic between values with different radicands is defined only
/// when the radicands differ by a rational square factor; anything else would
/// leave the single quadratic extension and raises ErrorKind::IncompatibleRadicand.
/// Ordering comparisons (see compare()) are exact for any pair of radicands.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(const Rational& value) : p_(value) {}  // NOLINT(google-explicit-constructor)
  QuadNum(long value) : p_(value) {}             // NOLINT(google-explicit-constructor)
  QuadNum(Rational p, Rational q, Rational radicand);

  /// sqrt(radicand) as a QuadNum.
  static QuadNum sqrt(const Rational& radicand) { return QuadNum(0, 1, radicand); }

  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }
  const Rational& radicand() const noexcept { return radicand_; }
  bool is_rational() const noexcept { return q_.is_zero(); }

  QuadNum conjugate() const;
  QuadNum inverse() const;

  /// Exact sign, by case analysis on the signs of p and q and a comparison of
  /// p^2 against q^2*D.
  int sign() const;

  /// Rational r with |r - value| <= eps.
  Rational approx(const Rational& eps) const;
  double to_double() const;
  std::string to_string() const;
  std::string to_decimal(int digits) const;

  friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator/(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x);

  QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
  QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
  QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }

  /// Structural equality of canonical forms.
  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && x.radicand_ == y.radicand_;
  }

 private:
  void canonicalize();

  Rational p_;
  Rational q_;
  Rational radicand_;
};

/// Three-way exact comparison; radicands may differ.
int compare(const QuadNum& x, const QuadNum& y);

inline bool less(const QuadNum& x, const QuadNum& y) { return compare(x, y) < 0; }

QuadNum pow(const QuadNum& base, unsigned exponent);

}  // namespace pwz
