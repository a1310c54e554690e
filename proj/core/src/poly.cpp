#include "pwz/poly.hpp"

#include <algorithm>
#include <utility>

#include "pwz/error.hpp"

namespace pwz {

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

QuadNum Poly::eval(const QuadNum& x) const {
  if (x.is_rational()) return QuadNum(eval(x.p()));
  // Horner on the pair (u, v) representing u + v*sqrt(D).
  const Rational& d = x.radicand();
  Rational u, v;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Rational nu = u * x.p() + v * x.q() * d + *it;
    Rational nv = u * x.q() + v * x.p();
    u = std::move(nu);
    v = std::move(nv);
  }
  return QuadNum(u, v, d);
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : coeffs_) {
    const mpz_class scaled = c.raw().get_num() * (den_lcm / c.raw().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return *this * Rational(den_lcm, num_gcd);
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) out += mag.to_string();
    if (i >= 1) {
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator*(const Poly& l, const Poly& r) {
  if (l.is_zero() || r.is_zero()) return Poly();
  std::vector<Rational> out(l.coeffs_.size() + r.coeffs_.size() - 1);
  for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
    if (l.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
  }
  return Poly(std::move(out));
}

DivMod divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const int dd = divisor.degree();
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  if (dividend.degree() < dd) return {Poly(), dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const Rational inv_lead = divisor.leading().inverse();
  for (int k = dividend.degree(); k >= dd; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] * inv_lead;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::InvalidArgument, "gcd of two zero polynomials");
  Poly a = p.monic();
  Poly b = q.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

SquarefreeDecomposition squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "square-free decomposition of zero");
  SquarefreeDecomposition out;
  if (p.degree() == 0) {
    out.squarefree = Poly::constant(1);
    return out;
  }
  // Yun's algorithm.
  const Poly dp = p.derivative();
  const Poly a0 = gcd(p, dp);
  Poly b = divmod(p, a0).quotient;
  Poly c = divmod(dp, a0).quotient;
  out.squarefree = b;
  Poly d = c - b.derivative();
  int multiplicity = 1;
  while (b.degree() > 0) {
    Poly a = gcd(b, d);
    if (a.degree() > 0) out.factors.push_back({a, multiplicity});
    b = divmod(b, a).quotient;
    c = divmod(d, a).quotient;
    d = c - b.derivative();
    ++multiplicity;
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "square-free part of zero");
  if (p.degree() <= 0) return Poly::constant(1);
  return divmod(p, gcd(p, p.derivative())).quotient;
}

}  // namespace pwz
