#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pwz/poly.hpp"
#include "pwz/quadnum.hpp"
#include "pwz/rational.hpp"

namespace pwz {

/// Coefficients of W_n = (a z + b) W_{n-1} + (c z + d) W_{n-2}.
struct Params {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  /// Throws ErrorKind::InvalidParameters unless a*c != 0.
  void validate() const;
  /// a, b, d < 0 < c: the standing hypothesis of every theorem checked here.
  bool in_regime() const;
  void require_regime() const;

  std::string to_string() const;

  friend bool operator==(const Params&, const Params&) = default;
};

/// Auxiliary polynomials attached to the recurrence.
struct AuxPolys {
  Poly A;      // a z + b
  Poly B;      // c z + d
  Poly h;      // 2 W_1 - A = (2 - a) z - b
  Poly g;      // (1 - a) z^2 - (b + c) z - d
  Poly Delta;  // A^2 + 4B
  Poly F;      // A^2 + B
};

AuxPolys aux_polys(const Params& params);

/// Normalised sequence W_0 = 1, W_1 = z, ..., W_N plus the auxiliary polynomials.
class SequenceBundle {
 public:
  SequenceBundle(Params params, std::vector<Poly> polys, AuxPolys aux)
      : params_(std::move(params)), polys_(std::move(polys)), aux_(std::move(aux)) {}

  const Params& params() const noexcept { return params_; }
  const AuxPolys& aux() const noexcept { return aux_; }
  const std::vector<Poly>& polys() const noexcept { return polys_; }
  const Poly& W(int n) const { return polys_.at(static_cast<std::size_t>(n)); }
  int n_max() const noexcept { return static_cast<int>(polys_.size()) - 1; }

  /// Test hook: replaces W_n, breaking the recurrence on purpose.
  SequenceBundle with_replaced(int n, Poly p) const;

 private:
  Params params_;
  std::vector<Poly> polys_;
  AuxPolys aux_;
};

SequenceBundle generate(const Params& params, int n_max);

/// W_n = (A^2 + 2B) W_{n-2} - B^2 W_{n-4} as exact polynomial identities for
/// every 4 <= n <= N. Throws when N < 4.
bool check_four_term(const SequenceBundle& bundle);

/// Eigenvalue closed form of W_n(x) in double precision. `value.imag()` is the
/// rounding residue of the complex route and must be small.
std::complex<double> closed_form_eval(const Params& params, int n, const Rational& x);

/// W_n(x) == x^n exactly for every n <= N, for each given point (zeros of g).
bool check_xg_identity(const SequenceBundle& bundle, const std::vector<QuadNum>& points);

/// W_n(x) == ((A(x) + n h(x)) / 2) * (A(x) / 2)^(n-1) exactly for 1 <= n <= N,
/// for each given point (zeros of Delta).
bool check_xdelta_identity(const SequenceBundle& bundle, const std::vector<QuadNum>& points);

}  // namespace pwz
