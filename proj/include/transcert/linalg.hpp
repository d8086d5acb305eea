#pragma once

#include <cstdint>
#include <vector>

#include "transcert/matrix.hpp"
#include "transcert/multipoly.hpp"

namespace transcert {

using PolyMatrix = Matrix<MultiPoly>;

PolyMatrix make_poly_matrix(std::size_t rows, std::size_t cols, std::size_t variable_count);

/// Reduced row echelon form over Q.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon row_echelon(RationalMatrix m);

struct RankKernel {
  std::size_t rank = 0;
  /// One primitive integer vector per free column, ordered by free column.
  std::vector<IntVector> kernel;
};

/// Exact rank and right kernel over Q. Kernel vectors come from the RREF free
/// columns and are scaled to content 1 with a positive first nonzero entry.
RankKernel rank_kernel_Q(const RationalMatrix& m);

/// Left kernel {w : w^T m = 0}, same normalization.
std::vector<IntVector> left_kernel_Q(const RationalMatrix& m);

std::size_t rank_Q(const RationalMatrix& m);
Rational determinant_Q(const RationalMatrix& m);
/// Throws PreconditionError when m is singular.
RationalMatrix inverse_Q(const RationalMatrix& m);

/// Row and column indices of a nonsingular maximal minor.
struct RankProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

RankProfile rank_profile_Q(const RationalMatrix& m);

/// Result of fraction-free elimination with full pivoting over Q[x].
struct FractionFreeResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // original indices, in pivot order
  std::vector<std::size_t> pivot_cols;
  /// For a square full-rank input this is the determinant; zero otherwise.
  MultiPoly determinant;
};

/// Bareiss elimination. Pivots are chosen to keep entries small: nonzero
/// constants first, then lowest degree, then fewest terms.
FractionFreeResult fraction_free_eliminate(const PolyMatrix& m);

MultiPoly determinant(const PolyMatrix& m);

struct PolyRankOptions {
  std::uint64_t seed = 0;
  /// Exact Bareiss when min(rows, cols) is at most this.
  std::size_t exact_threshold = 8;
  std::size_t trials = 5;
};

struct PolyRank {
  std::size_t rank = 0;
  /// A minor whose symbolic determinant is nonzero, certifying rank >= rank.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  bool randomized = false;
};

/// Rank over the rational function field Q(x_1..x_n).
PolyRank rank_poly_certified(const PolyMatrix& m, const PolyRankOptions& options = {});
std::size_t rank_poly(const PolyMatrix& m, const PolyRankOptions& options = {});

/// Entrywise substitution of every variable.
RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point);

}  // namespace transcert
