#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "transcert/matrix.hpp"

namespace transcert {

/// Element of Q_p known modulo p^absolute_precision:
/// p^valuation * unit + O(p^absolute_precision), unit coprime to p and
/// reduced modulo p^(absolute_precision - valuation).
/// Zero is stored as O(p^k): is_zero() with valuation == absolute_precision.
class PadicNumber {
 public:
  PadicNumber() = default;

  static PadicNumber zero(unsigned long p, std::int64_t absolute_precision);
  static PadicNumber from_rational(const Rational& q, unsigned long p, std::int64_t absolute_precision);
  /// Known to relative_precision digits past the valuation.
  static PadicNumber from_rational_relative(const Rational& q, unsigned long p, std::int64_t relative_precision);

  unsigned long prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return zero_; }
  std::int64_t valuation() const noexcept { return v_; }
  const Integer& unit() const noexcept { return unit_; }
  std::int64_t absolute_precision() const noexcept { return k_; }
  std::int64_t relative_precision() const noexcept { return zero_ ? 0 : k_ - v_; }

  /// Representative as an exact rational p^v * unit.
  Rational to_rational() const;
  /// Base-p digits of the unit, least significant first.
  std::vector<unsigned long> digits() const;
  /// e.g. "1 + 3*5 + 4*5^2 + O(5^3)"; zero prints as "O(p^k)".
  std::string to_string() const;

  /// Same value known to fewer digits; throws if k exceeds the current precision.
  PadicNumber truncate(std::int64_t k) const;

  friend bool operator==(const PadicNumber&, const PadicNumber&) = default;

  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
  /// Throws DomainError when b is indistinguishable from zero.
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);
  PadicNumber operator-() const;
  PadicNumber pow(const Integer& e) const;

 private:
  PadicNumber(unsigned long p, bool zero, std::int64_t v, Integer unit, std::int64_t k);
  static PadicNumber normalize(unsigned long p, Integer value, std::int64_t shift, std::int64_t k);

  unsigned long p_ = 2;
  bool zero_ = true;
  std::int64_t v_ = 0;
  Integer unit_ = 0;
  std::int64_t k_ = 0;
};

enum class PadicOp { add, sub, mul, div };
/// Throws PreconditionError on a prime mismatch.
PadicNumber padic_arith(const PadicNumber& a, const PadicNumber& b, PadicOp op);

Integer prime_power(unsigned long p, std::int64_t e);
/// p-adic valuation of a nonzero rational.
std::int64_t valuation(const Rational& q, unsigned long p);

/// Iwasawa logarithm: log_p(p) = 0 and log_p of roots of unity is 0.
/// The result is known modulo p^(relative precision of x).
PadicNumber log_p(const PadicNumber& x);

/// Requires v(x) >= 1 (p odd) or v(x) >= 2 (p = 2); throws DomainError otherwise.
PadicNumber exp_p(const PadicNumber& x);

/// Root of unity congruent to a modulo p, to absolute precision k.
PadicNumber teichmuller(const Integer& a, unsigned long p, std::int64_t k);

/// Newton lift of a simple root r0 of f = c_0 + c_1 x + ... modulo p to
/// precision k. Throws PreconditionError unless f(r0) = 0 and f'(r0) != 0 mod p.
PadicNumber hensel_root(const IntVector& f, const Integer& r0, unsigned long p, std::int64_t k);

using PadicMatrix = Matrix<PadicNumber>;

/// Algebraic unit given by its minimal polynomial (c_0..c_d) and one residue
/// modulo p per embedding into Q_p.
struct AlgebraicUnit {
  IntVector minpoly;
  std::vector<Integer> residues;
};

using UnitDescription = std::variant<Rational, AlgebraicUnit>;

struct PadicRank {
  /// Rank is at least this many; remaining entries are zero at their precision.
  std::size_t certified_rank = 0;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::int64_t> pivot_valuations;
};

/// Gaussian elimination picking a minimum-valuation pivot at every step.
PadicRank padic_rank(const PadicMatrix& m);

struct LogMatrix {
  PadicMatrix matrix;  // rows: units, cols: embeddings
  PadicRank rank;
  std::int64_t precision = 0;
};

/// Rational units fill every column; algebraic units must all have the same
/// number of residues. Throws DomainError for a non-unit.
LogMatrix log_matrix(const std::vector<UnitDescription>& units, unsigned long p, std::int64_t k);

struct InterpDetReport {
  std::int64_t valuation = 0;        // v_p(det(u^{a_i y_j}))
  Integer theta;                     // d(d-1)/2
  std::int64_t u_valuation = 0;      // v_p(u - 1)
  Integer bound;                     // theta * v_p(u - 1)
  bool holds = false;
  std::int64_t working_precision = 0;
};

/// One attempt at fixed working precision; throws PrecisionError when the
/// elimination runs out of digits.
InterpDetReport interp_det_valuation_at(const Rational& u, unsigned long p, const IntVector& a, const IntVector& y,
                                        std::int64_t working_precision);

/// Retries with doubled precision from 32 up to max_precision digits.
InterpDetReport interp_det_valuation(const Rational& u, unsigned long p, const IntVector& a, const IntVector& y,
                                     std::int64_t max_precision = 4096);

}  // namespace transcert
