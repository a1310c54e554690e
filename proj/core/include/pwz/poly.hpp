#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pwz/quadnum.hpp"
#include "pwz/rational.hpp"

namespace pwz {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree order. The zero polynomial has no coefficients and degree -1;
/// otherwise the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly monomial(const Rational& c, std::size_t degree);
  /// slope*z + intercept
  static Poly linear(const Rational& slope, const Rational& intercept) { return Poly({intercept, slope}); }
  static Poly identity() { return linear(1, 0); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const Rational& leading() const;
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  Rational eval(const Rational& x) const;
  QuadNum eval(const QuadNum& x) const;
  double eval(double x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }
  int sign_at(const QuadNum& x) const { return eval(x).sign(); }

  Poly derivative() const;
  Poly monic() const;
  /// Positive multiple with coprime integer coefficients.
  Poly primitive() const;

  std::string to_string(std::string_view var = "z") const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly l, const Poly& r) { return l += r; }
  friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
  friend Poly operator*(const Poly& l, const Poly& r);
  friend Poly operator*(Poly l, const Rational& s) { return l *= s; }
  friend Poly operator*(const Rational& s, Poly r) { return r *= s; }
  friend Poly operator-(const Poly& p) { return p * Rational(-1); }
  friend bool operator==(const Poly& l, const Poly& r) { return l.coeffs_ == r.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& dividend, const Poly& divisor);

/// Monic greatest common divisor by Euclidean remainders over Q.
Poly gcd(const Poly& p, const Poly& q);

Poly pow(const Poly& base, unsigned exponent);

struct SquarefreeFactor {
  Poly factor;  // monic, squarefree
  int multiplicity;
};

/// p = lc(p) * prod(factor_i ^ multiplicity_i); `squarefree` is p / gcd(p, p').
struct SquarefreeDecomposition {
  Poly squarefree;
  std::vector<SquarefreeFactor> factors;
};

SquarefreeDecomposition squarefree_decomposition(const Poly& p);
Poly squarefree_part(const Poly& p);

}  // namespace pwz
