#include "pwz/quadnum.hpp"

#include <array>
#include <utility>

#include "pwz/error.hpp"

namespace pwz {

namespace {

constexpr std::array<unsigned long, 15> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19,
                                                        23, 29, 31, 37, 41, 43, 47};

// Rewrites y so that it shares x's radicand, when the two radicands differ by
// a rational square.
QuadNum align(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) return y;
  auto factor = exact_sqrt(y.radicand() / x.radicand());
  if (!factor) {
    throw Error(ErrorKind::IncompatibleRadicand,
                "incompatible radicand: sqrt(" + x.radicand().to_string() + ") vs sqrt(" +
                    y.radicand().to_string() + ")");
  }
  return QuadNum(y.p(), y.q() * *factor, x.radicand());
}

const Rational& common_radicand(const QuadNum& x, const QuadNum& y) {
  return x.is_rational() ? y.radicand() : x.radicand();
}

}  // namespace

QuadNum::QuadNum(Rational p, Rational q, Rational radicand)
    : p_(std::move(p)), q_(std::move(q)), radicand_(std::move(radicand)) {
  canonicalize();
}

void QuadNum::canonicalize() {
  if (radicand_.sign() < 0) {
    throw Error(ErrorKind::NegativeRadicand, "negative radicand " + radicand_.to_string());
  }
  if (q_.is_zero() || radicand_.is_zero()) {
    q_ = 0;
    radicand_ = 0;
    return;
  }
  // sqrt(n/m) = sqrt(n*m)/m
  mpz_class n = radicand_.numerator();
  const mpz_class m = radicand_.denominator();
  n *= m;
  q_ /= Rational(m);
  mpz_class scale = 1;
  for (unsigned long prime : kSmallPrimes) {
    const mpz_class square = prime * prime;
    while (mpz_divisible_p(n.get_mpz_t(), square.get_mpz_t())) {
      n /= square;
      scale *= prime;
    }
  }
  q_ *= Rational(scale);
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    p_ += q_ * Rational(root);
    q_ = 0;
    radicand_ = 0;
    return;
  }
  radicand_ = Rational(n);
}

QuadNum QuadNum::conjugate() const { return QuadNum(p_, -q_, radicand_); }

QuadNum QuadNum::inverse() const {
  const Rational norm = p_ * p_ - q_ * q_ * radicand_;
  if (norm.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero quadratic number");
  return QuadNum(p_ / norm, -q_ / norm, radicand_);
}

int QuadNum::sign() const {
  const int sp = p_.sign();
  const int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const Rational p_squared = p_ * p_;
  const Rational q_squared_d = q_ * q_ * radicand_;
  if (p_squared == q_squared_d) return 0;
  return p_squared > q_squared_d ? sp : sq;
}

Rational QuadNum::approx(const Rational& eps) const {
  if (eps.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "approx requires eps > 0");
  if (is_rational()) return p_;
  // floor(sqrt(D * 4^k)) / 2^k is within 2^-k of sqrt(D); pick 2^k >= |q| / eps.
  const Rational ratio = q_.abs() / eps;
  const mpz_class bound = ceil(ratio).numerator();
  const unsigned long k = mpz_sizeinbase(bound.get_mpz_t(), 2) + 1;
  mpz_class scaled = radicand_.numerator();
  scaled <<= 2 * k;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class two_k = 1;
  two_k <<= k;
  return p_ + q_ * Rational(root, two_k);
}

double QuadNum::to_double() const {
  if (is_rational()) return p_.to_double();
  return approx(Rational(1, 1L << 30) * Rational(1, 1L << 30) * Rational(1, 1L << 20)).to_double();
}

std::string QuadNum::to_string() const {
  if (is_rational()) return p_.to_string();
  std::string out;
  if (!p_.is_zero()) out = p_.to_string() + (q_.sign() < 0 ? " - " : " + ");
  else if (q_.sign() < 0) out = "-";
  const Rational mag = q_.abs();
  if (mag != Rational(1)) out += mag.to_string() + "*";
  out += "sqrt(" + radicand_.to_string() + ")";
  return out;
}

std::string QuadNum::to_decimal(int digits) const {
  if (is_rational()) return p_.to_decimal(digits);
  return approx(pow10(-(digits + 6))).to_decimal(digits);
}

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  const QuadNum ya = align(x, y);
  return QuadNum(x.p_ + ya.p_, x.q_ + ya.q_, common_radicand(x, ya));
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) { return x + (-y); }

QuadNum operator-(const QuadNum& x) { return QuadNum(-x.p_, -x.q_, x.radicand_); }

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  const QuadNum ya = align(x, y);
  const Rational& d = common_radicand(x, ya);
  return QuadNum(x.p_ * ya.p_ + x.q_ * ya.q_ * d, x.p_ * ya.q_ + ya.p_ * x.q_, d);
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) { return x * align(x, y).inverse(); }

int compare(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand() ||
      exact_sqrt(x.radicand() / y.radicand())) {
    return (x - y).sign();
  }
  // x - y = s - t with s = (px - py) + qx*sqrt(Dx) and t = qy*sqrt(Dy).
  const QuadNum s(x.p() - y.p(), x.q(), x.radicand());
  const QuadNum t(0, y.q(), y.radicand());
  const int ss = s.sign();
  const int st = t.sign();
  if (ss != st) return ss > st ? 1 : -1;
  if (ss == 0) return 0;
  // Same sign: compare s^2 against the rational t^2.
  const Rational t_squared = y.q() * y.q() * y.radicand();
  const int d = (s * s - QuadNum(t_squared)).sign();
  return ss > 0 ? d : -d;
}

QuadNum pow(const QuadNum& base, unsigned exponent) {
  QuadNum result(1);
  QuadNum b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

}  // namespace pwz
