#include "pwz/sequence.hpp"

#include <cmath>
#include <utility>

#include "pwz/error.hpp"

namespace pwz {

void Params::validate() const {
  if (a.is_zero() || c.is_zero()) {
    throw Error(ErrorKind::InvalidParameters, "a*c must be nonzero (" + to_string() + ")");
  }
}

bool Params::in_regime() const { return a.sign() < 0 && b.sign() < 0 && d.sign() < 0 && c.sign() > 0; }

void Params::require_regime() const {
  validate();
  if (!in_regime()) {
    throw Error(ErrorKind::Regime, "parameters outside a, b, d < 0 < c (" + to_string() + ")");
  }
}

std::string Params::to_string() const {
  return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() + " d=" + d.to_string();
}

AuxPolys aux_polys(const Params& params) {
  AuxPolys aux;
  aux.A = Poly::linear(params.a, params.b);
  aux.B = Poly::linear(params.c, params.d);
  aux.h = Poly::linear(Rational(2) - params.a, -params.b);
  aux.g = Poly({-params.d, -(params.b + params.c), Rational(1) - params.a});
  aux.Delta = aux.A * aux.A + aux.B * Rational(4);
  aux.F = aux.A * aux.A + aux.B;
  return aux;
}

SequenceBundle SequenceBundle::with_replaced(int n, Poly p) const {
  auto polys = polys_;
  polys.at(static_cast<std::size_t>(n)) = std::move(p);
  return SequenceBundle(params_, std::move(polys), aux_);
}

SequenceBundle generate(const Params& params, int n_max) {
  params.validate();
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "n_max must be >= 1");
  AuxPolys aux = aux_polys(params);
  std::vector<Poly> polys;
  polys.reserve(static_cast<std::size_t>(n_max) + 1);
  polys.push_back(Poly::constant(1));
  polys.push_back(Poly::identity());
  for (int n = 2; n <= n_max; ++n) {
    polys.push_back(aux.A * polys[static_cast<std::size_t>(n - 1)] + aux.B * polys[static_cast<std::size_t>(n - 2)]);
  }
  return SequenceBundle(params, std::move(polys), std::move(aux));
}

bool check_four_term(const SequenceBundle& bundle) {
  if (bundle.n_max() < 4) throw Error(ErrorKind::InvalidArgument, "four-term identity needs N >= 4");
  const auto& aux = bundle.aux();
  const Poly first = aux.A * aux.A + aux.B * Rational(2);
  const Poly second = aux.B * aux.B;
  for (int n = 4; n <= bundle.n_max(); ++n) {
    if (bundle.W(n) != first * bundle.W(n - 2) - second * bundle.W(n - 4)) return false;
  }
  return true;
}

std::complex<double> closed_form_eval(const Params& params, int n, const Rational& x) {
  using cd = std::complex<double>;
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
  const Rational A = params.a * x + params.b;
  const Rational B = params.c * x + params.d;
  const Rational delta = A * A + B * Rational(4);
  const Rational w1_shift = x * Rational(2) - A;  // 2 W_1 - A
  if (delta.is_zero()) {
    if (n == 0) return {1.0, 0.0};
    const double half_a = (A / Rational(2)).to_double();
    return {((A + Rational(n) * w1_shift) / Rational(2)).to_double() * std::pow(half_a, n - 1), 0.0};
  }
  // Principal branch: the +0.0 imaginary part puts sqrt(-r) on +i*sqrt(r).
  const cd root = std::sqrt(cd(delta.to_double(), 0.0));
  const cd a_val(A.to_double(), 0.0);
  const cd shift(w1_shift.to_double(), 0.0);
  const cd lambda_plus = (a_val + root) / 2.0;
  const cd lambda_minus = (a_val - root) / 2.0;
  const cd alpha_plus = (root + shift) / (2.0 * root);
  const cd alpha_minus = (root - shift) / (2.0 * root);
  return alpha_plus * std::pow(lambda_plus, n) + alpha_minus * std::pow(lambda_minus, n);
}

bool check_xg_identity(const SequenceBundle& bundle, const std::vector<QuadNum>& points) {
  for (const auto& x : points) {
    QuadNum power(1);
    for (int n = 0; n <= bundle.n_max(); ++n) {
      if ((bundle.W(n).eval(x) - power).sign() != 0) return false;
      power = power * x;
    }
  }
  return true;
}

bool check_xdelta_identity(const SequenceBundle& bundle, const std::vector<QuadNum>& points) {
  const auto& aux = bundle.aux();
  for (const auto& x : points) {
    const QuadNum a_val = aux.A.eval(x);
    const QuadNum h_val = aux.h.eval(x);
    const QuadNum half_a = a_val * QuadNum(Rational(1, 2));
    QuadNum power(1);  // (A/2)^(n-1)
    for (int n = 1; n <= bundle.n_max(); ++n) {
      const QuadNum expected = (a_val + QuadNum(Rational(n)) * h_val) * QuadNum(Rational(1, 2)) * power;
      if ((bundle.W(n).eval(x) - expected).sign() != 0) return false;
      power = power * half_a;
    }
  }
  return true;
}

}  // namespace pwz
