#include "pwz/bivariate.hpp"

#include <algorithm>
#include <utility>

#include "pwz/error.hpp"

namespace pwz {

namespace {

Poly exact_quotient(const Poly& num, const Poly& den) {
  DivMod qr = divmod(num, den);
  if (!qr.remainder.is_zero()) throw Error(ErrorKind::Internal, "Bareiss step left a nonzero remainder");
  return std::move(qr.quotient);
}

}  // namespace

ParamPoly::ParamPoly(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ParamPoly ParamPoly::from_poly(const Poly& p) {
  std::vector<Poly> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(Poly::constant(c));
  return ParamPoly(std::move(coeffs));
}

void ParamPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Poly& ParamPoly::coeff(std::size_t i) const {
  static const Poly kZero;
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

ParamPoly ParamPoly::derivative() const {
  if (coeffs_.size() <= 1) return ParamPoly();
  std::vector<Poly> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return ParamPoly(std::move(out));
}

Poly ParamPoly::at(const Rational& param) const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.eval(param));
  return Poly(std::move(out));
}

ParamPoly operator+(const ParamPoly& l, const ParamPoly& r) {
  std::vector<Poly> out(std::max(l.coeffs_.size(), r.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = l.coeff(i) + r.coeff(i);
  return ParamPoly(std::move(out));
}

ParamPoly operator*(const ParamPoly& l, const ParamPoly& r) {
  if (l.is_zero() || r.is_zero()) return ParamPoly();
  std::vector<Poly> out(l.coeffs_.size() + r.coeffs_.size() - 1);
  for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
  }
  return ParamPoly(std::move(out));
}

Poly resultant(const ParamPoly& f, const ParamPoly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) return Poly::constant(1);
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Poly>> mat(size, std::vector<Poly>(size));
  // n shifted rows of f, then m shifted rows of g; coefficients by descending degree.
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) mat[row][row + k] = f.coeff(static_cast<std::size_t>(m - k));
  }
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) mat[n + row][row + k] = g.coeff(static_cast<std::size_t>(n - k));
  }

  int sign = 1;
  Poly previous = Poly::constant(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < size && mat[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == size) return Poly();
      std::swap(mat[k], mat[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        mat[i][j] = exact_quotient(mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j], previous);
      }
      mat[i][k] = Poly();
    }
    previous = mat[k][k];
  }
  Poly det = mat[size - 1][size - 1];
  return sign > 0 ? det : -det;
}

Poly discriminant(const ParamPoly& f) {
  const int m = f.degree();
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "discriminant needs degree >= 1");
  Poly res = exact_quotient(resultant(f, f.derivative()), f.leading());
  return ((m * (m - 1) / 2) % 2 == 0) ? res : -res;
}

}  // namespace pwz
