#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "transcert/rational.hpp"

namespace transcert {

using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e);

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically with x0 > x1 > ...
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q. Terms are kept in descending grlex
/// order and no stored coefficient is ever zero.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit MultiPoly(std::size_t variable_count = 0) : nvars_(variable_count) {}

  static MultiPoly constant(std::size_t variable_count, const Rational& c);
  static MultiPoly variable(std::size_t variable_count, std::size_t index);
  static MultiPoly monomial(const Exponents& exps, const Rational& c);

  std::size_t variable_count() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  /// Total degree; -1 for the zero polynomial.
  std::int64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// Leading term in grlex order; requires a nonzero polynomial.
  const TermMap::value_type& leading_term() const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned e) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Replaces variable `var` by a constant; the variable count is unchanged.
  MultiPoly substitute(std::size_t var, const Rational& value) const;

  /// Pads every monomial with a new variable x0 (shifting old x_i to x_{i+1})
  /// so that the result is homogeneous of degree deg(p).
  MultiPoly homogenize() const;
  /// Same, but pads up to an explicit degree >= deg(p).
  MultiPoly homogenize_to(std::int64_t degree) const;

  /// Same polynomial viewed in a ring with `variable_count` >= current count.
  MultiPoly extend_variables(std::size_t variable_count) const;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

enum class PolyOp { add, mul };

/// Exact sum or product; throws PreconditionError on a variable-count mismatch.
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

/// a / b when b divides a exactly; throws PreconditionError otherwise.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// All exponent vectors of total degree < bound, in ascending grlex order.
std::vector<Exponents> monomials_below_degree(std::size_t variable_count, std::uint32_t bound);

}  // namespace transcert
