#include "pwz/sturm.hpp"

#include <limits>
#include <utility>

#include "pwz/error.hpp"

namespace pwz {

std::string Endpoint::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: return value_.to_string();
  }
  return {};
}

double Endpoint::to_double() const {
  switch (kind_) {
    case Kind::NegInf: return -std::numeric_limits<double>::infinity();
    case Kind::PosInf: return std::numeric_limits<double>::infinity();
    case Kind::Finite: return value_.to_double();
  }
  return 0.0;
}

int compare(const Endpoint& x, const Endpoint& y) {
  const auto rank = [](const Endpoint& e) { return e.is_neg_inf() ? -1 : (e.is_pos_inf() ? 1 : 0); };
  const int rx = rank(x);
  const int ry = rank(y);
  if (rx != ry) return rx < ry ? -1 : 1;
  if (rx != 0) return 0;
  return compare(x.value(), y.value());
}

SturmChain::SturmChain(const Poly& p) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "Sturm chain needs a non-constant polynomial");
  polys_.push_back(squarefree_part(p).primitive());
  if (polys_.front().leading().sign() < 0) polys_.front() = -polys_.front();
  polys_.push_back(polys_.front().derivative().primitive());
  while (polys_.back().degree() > 0) {
    Poly rem = divmod(polys_[polys_.size() - 2], polys_.back()).remainder;
    if (rem.is_zero()) break;
    polys_.push_back((-rem).primitive());
  }
  integer_polys_.reserve(polys_.size());
  for (const auto& q : polys_) {
    std::vector<mpz_class> ints;
    ints.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) ints.push_back(c.numerator());
    integer_polys_.push_back(std::move(ints));
  }
}

int SturmChain::sign_of(std::size_t i, const Rational& x) const {
  // Sign of v^deg * q(u/v) with v > 0, by homogeneous Horner over the integers.
  const auto& c = integer_polys_[i];
  const mpz_class& u = x.raw().get_num();
  const mpz_class& v = x.raw().get_den();
  mpz_class acc = c.back();
  mpz_class vpow = 1;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    vpow *= v;
    acc *= u;
    acc += c[k] * vpow;
  }
  return sgn(acc);
}

int SturmChain::base_sign_at(const Rational& x) const { return sign_of(0, x); }

int SturmChain::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    const int s = sign_of(i, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::variations(const Endpoint& x) const {
  if (x.is_finite() && x.value().is_rational()) return variations(x.value().p());
  int count = 0;
  int last = 0;
  for (const auto& q : polys_) {
    int s = 0;
    if (x.is_finite()) {
      s = q.sign_at(x.value());
    } else {
      s = q.leading().sign();
      if (x.is_neg_inf() && q.degree() % 2 == 1) s = -s;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::count(const Endpoint& lo, const Endpoint& hi) const { return variations(lo) - variations(hi); }

int count_roots(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi) {
  if (compare(lo, hi) >= 0) {
    throw Error(ErrorKind::InvalidArgument, "count_roots needs lo < hi, got (" + lo.to_string() + ", " +
                                                hi.to_string() + "]");
  }
  return chain.count(lo, hi);
}

}  // namespace pwz
