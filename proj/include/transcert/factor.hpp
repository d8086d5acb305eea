#pragma once

#include <map>

#include "transcert/rational.hpp"

namespace transcert {

/// Prime factorization of a positive integer (trial division, then
/// Pollard-Brent rho with probabilistic primality).
std::map<Integer, long> factor_integer(const Integer& n);

/// Signed factorization of a nonzero rational: q = sign * prod p^e, e in Z.
struct RationalFactorization {
  bool negative = false;
  std::map<Integer, long> exponents;
};

RationalFactorization factor_rational(const Rational& q);

}  // namespace transcert
