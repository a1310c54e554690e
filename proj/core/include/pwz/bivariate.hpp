#pragma once

#include <vector>

#include "pwz/poly.hpp"

namespace pwz {

/// Polynomial in z whose coefficients are polynomials in a single parameter
/// (Q[c][z]). Used to treat a sequence member as a family indexed by c.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(std::vector<Poly> coeffs);

  /// Lifts a polynomial in z with parameter-free coefficients.
  static ParamPoly from_poly(const Poly& p);
  /// The z-free polynomial `p` in the parameter.
  static ParamPoly constant(const Poly& p) { return ParamPoly({p}); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Poly& coeff(std::size_t i) const;
  const Poly& leading() const { return coeff(coeffs_.size() - 1); }

  ParamPoly derivative() const;
  /// Substitutes a value for the parameter.
  Poly at(const Rational& param) const;

  friend ParamPoly operator+(const ParamPoly& l, const ParamPoly& r);
  friend ParamPoly operator*(const ParamPoly& l, const ParamPoly& r);
  friend bool operator==(const ParamPoly& l, const ParamPoly& r) { return l.coeffs_ == r.coeffs_; }

 private:
  void trim();

  std::vector<Poly> coeffs_;
};

/// Res_z(f, g) as a polynomial in the parameter: determinant of the Sylvester
/// matrix, computed with fraction-free (Bareiss) elimination over Q[c].
Poly resultant(const ParamPoly& f, const ParamPoly& g);

/// (-1)^(m(m-1)/2) * Res_z(f, f') / lc(f), m = deg_z f.
Poly discriminant(const ParamPoly& f);

}  // namespace pwz
