#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pwz {

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);
  explicit Rational(const mpz_class& value) : value_(value) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts integers ("5"), fractions ("-3/10") and decimals ("-0.3",
  /// "1.5e-2"). A leading U+2212 minus sign is accepted as well.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;
  double to_double() const { return value_.get_d(); }

  /// "p" or "p/q".
  std::string to_string() const { return value_.get_str(); }
  /// Fixed-point decimal rounded half-to-even at `digits` places.
  std::string to_decimal(int digits) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& l, const Rational& r) { return l.value_ == r.value_; }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    const int c = cmp(l.value_, r.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);
Rational pow10(int exponent);

/// Exact square root when `x` is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

Rational floor(const Rational& x);
Rational ceil(const Rational& x);

}  // namespace pwz
