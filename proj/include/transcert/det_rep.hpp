#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "transcert/linalg.hpp"

namespace transcert {

/// Square matrix whose entries are affine-linear: k + k x_1 + ... + k x_n.
class AffineMatrix {
 public:
  /// Throws PreconditionError unless `m` is square with entries of degree <= 1.
  explicit AffineMatrix(PolyMatrix m);

  std::size_t dimension() const noexcept { return m_.rows(); }
  const PolyMatrix& matrix() const noexcept { return m_; }

 private:
  PolyMatrix m_;
};

/// N = A B with A of degree <= d-1 (m x m(n+1)) and B = x (x) I_m where
/// x = (x_1, ..., x_n, 1)^T. Every monomial of positive degree is split off at
/// its lowest-index variable; constants go to the last block.
std::pair<PolyMatrix, PolyMatrix> factor_ab(const PolyMatrix& n, std::int64_t degree_bound);

/// [[I_s, B], [-A, 0]], whose determinant equals det(A B).
PolyMatrix embed_square(const PolyMatrix& a, const PolyMatrix& b);

struct DetRepOptions {
  /// Drop index k whenever row k or column k is the unit vector e_k; this
  /// keeps the determinant but breaks the (n+2)^(d-1) dimension law.
  bool prune = false;
};

/// Square affine matrix with det = p, built by alternating factor_ab and
/// embed_square until every entry has degree <= 1.
AffineMatrix determinantal_rep(const MultiPoly& p, const DetRepOptions& options = {});

/// Removes trivially expandable unit rows/columns (see DetRepOptions::prune).
PolyMatrix prune_unit_lines(const PolyMatrix& m);

struct RepCheck {
  bool verified = false;
  /// Randomized mode: upper bound on the probability that a wrong
  /// representation passes all trials, (deg / range)^trials.
  std::optional<Rational> false_pass_bound;
};

struct SymbolicMode {};
struct RandomizedMode {
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  std::int64_t range = 1'000'000;  // points drawn from [-range, range]
};

RepCheck verify_rep(const AffineMatrix& n, const MultiPoly& p, SymbolicMode);
RepCheck verify_rep(const AffineMatrix& n, const MultiPoly& p, RandomizedMode mode);

}  // namespace transcert
