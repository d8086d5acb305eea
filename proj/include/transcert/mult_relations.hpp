#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "transcert/matrix.hpp"
#include "transcert/multipoly.hpp"

namespace transcert {

/// Tuple of nonzero rationals alpha_1..alpha_n.
class RationalTuple {
 public:
  RationalTuple() = default;
  /// Throws PreconditionError on a zero entry.
  explicit RationalTuple(RatVector values);

  std::size_t size() const noexcept { return values_.size(); }
  const RatVector& values() const noexcept { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }

 private:
  RatVector values_;
};

/// m x n grid of nonzero rationals x_{i,j}; row i is the generator x_i.
class GeneratorMatrix {
 public:
  explicit GeneratorMatrix(RationalMatrix x);
  const RationalMatrix& values() const noexcept { return x_; }
  std::size_t rows() const noexcept { return x_.rows(); }
  std::size_t cols() const noexcept { return x_.cols(); }

 private:
  RationalMatrix x_;
};

/// prod alpha_i^lambda_i, exactly.
Rational power_product(const RationalTuple& t, std::span<const Integer> lambda);
bool is_relation(const RationalTuple& t, std::span<const Integer> lambda);

/// Lattice {lambda in Z^n : prod alpha_i^lambda_i = 1}; columns of `basis`
/// form its canonical HNF basis.
struct RelationLattice {
  IntegerMatrix basis;
  std::size_t rank() const noexcept { return basis.cols(); }
};

/// Exponent vectors over primes plus a sign coordinate taken mod 2, reduced
/// to an integer kernel. Complete: every relation lies in the result.
RelationLattice relation_lattice(const RationalTuple& t);

/// Largest number of hypothesis points (L+1)^n accepted by vandermonde_relation.
inline constexpr std::uint64_t kMaxVandermondePoints = 1'000'000;

/// Checks f(alpha_1^z, ..., alpha_n^z) = 0 for z = 1..(L+1)^n exactly.
/// Throws PreconditionError when f is zero, exceeds degree L in some
/// variable, or the point count exceeds kMaxVandermondePoints.
bool vandermonde_hypothesis_holds(const RationalTuple& t, const MultiPoly& f, std::uint32_t l_bound);

/// Constructive reading of the Vandermonde criterion: with the vanishing
/// hypothesis verified, two exponent tuples in {0..L}^n must give the same
/// power product, and their difference is a relation. The lexicographically
/// first collision wins. Throws PreconditionError if the hypothesis fails and
/// SolverFailure if no collision exists (impossible when it holds).
IntVector vandermonde_relation(const RationalTuple& t, const MultiPoly& f, std::uint32_t l_bound);

struct XnSet {
  std::vector<RatVector> points;  // distinct, in order of first occurrence
  std::uint64_t box_size = 0;     // (N+1)^m exponent tuples enumerated
};

/// X(N) = { prod_i x_i^{a_i} : 0 <= a_i <= N }, componentwise in Q^n.
XnSet enumerate_xn(const GeneratorMatrix& g, std::uint64_t n_bound);

/// Nonzero P of total degree < d vanishing on every point, from the exact
/// kernel of the point-by-monomial evaluation matrix. Integer coefficients
/// with content 1; nullopt when the evaluation matrix has full column rank.
std::optional<MultiPoly> vanishing_poly(const std::vector<RatVector>& points, std::uint32_t degree_bound);

/// <a, b> = prod_{i,j} x_{i,j}^{a_i b_j}.
Rational pairing(const GeneratorMatrix& g, std::span<const Integer> a, std::span<const Integer> b);

struct PairingReport {
  bool trivial = false;          // <A, B> = 1 on all basis pairs
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  Rational dimension_sum;        // rank_a/m + rank_b/n
  bool meets_threshold = false;  // dimension_sum > 1
};

/// a_basis is m x m', b_basis is n x n' (columns are generators).
PairingReport subgroup_pairing_trivial(const GeneratorMatrix& g, const IntegerMatrix& a_basis,
                                       const IntegerMatrix& b_basis);

/// Minimum of sum ||v_j|| over d distinct tuples in (Z>=0)^r: fill the
/// total-degree shells, shell k holding C(k+r-1, r-1) tuples.
Integer theta(std::uint64_t r, std::uint64_t d);

/// (r / 6e) d^((r+1)/r), the asymptotic lower bound for theta.
long double theta_asymptotic_bound(std::uint64_t r, std::uint64_t d);

}  // namespace transcert
