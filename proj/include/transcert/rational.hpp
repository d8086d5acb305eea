#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace transcert {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Canonical num/den; throws PreconditionError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "-a" or "a/b" (b != 0) into a canonical rational.
Rational parse_rational(std::string_view text);

/// Parses a decimal integer; rejects fractions.
Integer parse_integer(std::string_view text);

/// Canonical text form: "a/b" with b > 0, or "a" when b == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Exact q^e for any integer e; throws PreconditionError on 0^negative.
Rational pow(const Rational& q, const Integer& e);
Rational pow(const Rational& q, std::int64_t e);

/// Scales a rational vector to a primitive integer vector (content 1) whose
/// first nonzero entry is positive. The zero vector maps to zeros.
IntVector primitive_integer(std::span<const Rational> v);

/// Same normalization applied to an integer vector.
IntVector primitive_integer(std::span<const Integer> v);

RatVector to_rational(std::span<const Integer> v);

bool is_zero_vector(std::span<const Rational> v);
bool is_zero_vector(std::span<const Integer> v);

/// Largest absolute value of the entries (0 for an empty vector).
Integer max_abs(std::span<const Integer> v);

}  // namespace transcert
