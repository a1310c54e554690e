#include "pwz/rational.hpp"

#include <cctype>
#include <string>

#include "pwz/error.hpp"

namespace pwz {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::IncompatibleRadicand: return "incompatible radicand";
    case ErrorKind::NegativeRadicand: return "negative radicand";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::InvalidParameters: return "invalid parameters";
    case ErrorKind::Regime: return "regime";
    case ErrorKind::NotApplicable: return "not applicable";
    case ErrorKind::UnsupportedCase: return "unsupported case";
    case ErrorKind::Internal: return "internal";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void parse_failure(std::string_view text) {
  throw Error(ErrorKind::Parse, "cannot parse rational from '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (s.starts_with(kUnicodeMinus)) {
    negative = true;
    s.remove_prefix(kUnicodeMinus.size());
  } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) parse_failure(text);

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) parse_failure(text);
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else {
    long exponent = 0;
    auto mantissa = s;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      mantissa = s.substr(0, e);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) parse_failure(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    long scale = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      auto int_part = mantissa.substr(0, dot);
      auto frac_part = mantissa.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) parse_failure(text);
      if ((!int_part.empty() && !all_digits(int_part)) ||
          (!frac_part.empty() && !all_digits(frac_part))) {
        parse_failure(text);
      }
      digits = std::string(int_part) + std::string(frac_part);
      scale = static_cast<long>(frac_part.size());
    } else {
      if (!all_digits(mantissa)) parse_failure(text);
      digits = std::string(mantissa);
    }
    value = mpq_class(mpz_class(digits, 10));
    value *= pow10(static_cast<int>(exponent - scale)).raw();
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  const mpz_class scale = pow10(digits).numerator();
  const mpq_class scaled = ::abs(value_) * scale;
  mpz_class q = scaled.get_num() / scaled.get_den();  // floor, value is non-negative
  const mpq_class frac = scaled - mpq_class(q);
  const int half = cmp(frac, mpq_class(1, 2));
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<size_t>(digits)) {
      body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  const bool negative = sign() < 0 && q != 0;
  return negative ? "-" + body : body;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational pow10(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const mpz_class& num = x.raw().get_num();
  const mpz_class& den = x.raw().get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

Rational floor(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return Rational(q);
}

Rational ceil(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return Rational(q);
}

}  // namespace pwz
