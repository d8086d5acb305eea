#include "transcert/rational.hpp"

#include <cctype>

#include "transcert/errors.hpp"

namespace transcert {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return Integer(strip_plus(text), 10);
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(Integer(strip_plus(num), 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Rational pow(const Rational& q, const Integer& e) {
  if (!e.fits_slong_p()) throw PreconditionError("exponent out of range");
  return pow(q, static_cast<std::int64_t>(e.get_si()));
}

Rational pow(const Rational& q, std::int64_t e) {
  if (e < 0) {
    if (q == 0) throw PreconditionError("zero raised to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntVector primitive_integer(std::span<const Rational> v) {
  Integer lcm = 1;
  for (const auto& q : v) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    Integer scaled = q.get_num() * (lcm / q.get_den());
    out.push_back(scaled);
  }
  return primitive_integer(std::span<const Integer>(out));
}

IntVector primitive_integer(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  IntVector out(v.begin(), v.end());
  if (g == 0) return out;
  int sign = 0;
  for (const auto& z : v) {
    if (z != 0) {
      sign = sgn(z);
      break;
    }
  }
  if (sign < 0) g = -g;
  for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  return out;
}

RatVector to_rational(std::span<const Integer> v) {
  return RatVector(v.begin(), v.end());
}

bool is_zero_vector(std::span<const Rational> v) {
  for (const auto& q : v) {
    if (q != 0) return false;
  }
  return true;
}

bool is_zero_vector(std::span<const Integer> v) {
  for (const auto& z : v) {
    if (z != 0) return false;
  }
  return true;
}

Integer max_abs(std::span<const Integer> v) {
  Integer m = 0;
  for (const auto& z : v) {
    if (abs(z) > m) m = abs(z);
  }
  return m;
}

}  // namespace transcert
