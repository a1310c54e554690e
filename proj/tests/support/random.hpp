#pragma once

#include <random>

#include "pwz/rational.hpp"
#include "pwz/sequence.hpp"

namespace pwz::test {

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 20) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(lo * q, hi * q);
  return Rational(num(rng), q);
}

// a, b, d < 0 < c, all nonzero.
inline Params random_regime(std::mt19937_64& rng) {
  auto negative = [&](long lo) {
    Rational x;
    do x = random_rational(rng, lo, 0); while (x.is_zero());
    return x;
  };
  Rational c;
  do c = random_rational(rng, 0, 30); while (c.is_zero());
  return {negative(-5), negative(-10), c, negative(-10)};
}

}  // namespace pwz::test
