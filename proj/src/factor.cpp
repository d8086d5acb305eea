#include "transcert/factor.hpp"

#include "transcert/errors.hpp"

namespace transcert {

namespace {

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer rho_factor(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    std::size_t r = 1;
    const std::size_t m = 128;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, long>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const Integer d = rho_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Integer, long> factor_integer(const Integer& n) {
  if (n <= 0) throw PreconditionError("factor_integer: argument must be positive");
  std::map<Integer, long> out;
  Integer m = n;
  for (unsigned long p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
    if (m == 1) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Integer(p)];
      m /= p;
    }
  }
  factor_into(m, out);
  return out;
}

RationalFactorization factor_rational(const Rational& q) {
  if (q == 0) throw PreconditionError("factor_rational: zero has no factorization");
  RationalFactorization f;
  f.negative = q < 0;
  for (const auto& [p, e] : factor_integer(abs(q.get_num()))) f.exponents[p] += e;
  for (const auto& [p, e] : factor_integer(q.get_den())) f.exponents[p] -= e;
  return f;
}

}  // namespace transcert
