#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transcert/linalg.hpp"

namespace transcert {

/// Ordered basis of formal symbols l_1..l_r, assumed Q-linearly independent.
/// When `includes_one` is set, index 0 is the constant symbol "1".
class SymbolSpace {
 public:
  SymbolSpace() = default;
  /// `names` must be distinct. With includes_one, "1" is prepended unless the
  /// caller already listed it, in which case it is moved to the front.
  SymbolSpace(std::vector<std::string> names, bool includes_one);

  static constexpr const char* kOne = "1";

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool includes_one() const noexcept { return includes_one_; }
  /// Index of the constant symbol; only meaningful when includes_one().
  std::size_t one_index() const noexcept { return 0; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const SymbolSpace&, const SymbolSpace&) = default;

 private:
  std::vector<std::string> names_;
  bool includes_one_ = false;
};

/// Coefficient vector of an element of the symbol span.
using LinCombo = RatVector;

class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  SymbolicMatrix(SymbolSpace space, std::size_t rows, std::size_t cols);

  const SymbolSpace& space() const noexcept { return space_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  LinCombo& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
  const LinCombo& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

  /// Sets entry (i, j) to c * symbol k added to its current value.
  void add(std::size_t i, std::size_t j, std::size_t symbol, const Rational& c);

  friend bool operator==(const SymbolicMatrix&, const SymbolicMatrix&) = default;

 private:
  SymbolSpace space_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LinCombo> entries_;
};

/// M = sum_i l_i M_i; returns M_1..M_r.
std::vector<RationalMatrix> decompose(const SymbolicMatrix& m);

/// Inverse of decompose over a given space.
SymbolicMatrix reassemble(const SymbolSpace& space, const std::vector<RationalMatrix>& parts);

/// M_x = sum_i x_i M_i as a polynomial matrix in r variables (x_0 is the
/// constant symbol when the space includes one).
PolyMatrix generic_matrix(const SymbolicMatrix& m);

/// Rank of M_x over Q(x). The constant symbol stays a free variable.
std::size_t structural_rank(const SymbolicMatrix& m, const PolyRankOptions& options = {});
PolyRank structural_rank_certified(const SymbolicMatrix& m, const PolyRankOptions& options = {});

/// Rank of M_x after substituting x_0 = 1 for the constant symbol. Equals
/// structural_rank when the space has no constant symbol.
std::size_t specialized_rank(const SymbolicMatrix& m, const PolyRankOptions& options = {});

/// Re-expresses m in a new basis whose j-th symbol is sum_i T_ij l_i
/// (columns of T give the new symbols in the old basis), i.e. c' = T^{-1} c.
/// With a constant symbol, T must fix it. Throws PreconditionError when T is
/// singular.
SymbolicMatrix basis_change(const SymbolicMatrix& m, const RationalMatrix& new_basis,
                            std::vector<std::string> new_names = {});

/// m' = L * m * R for rational L, R.
SymbolicMatrix multiply(const RationalMatrix& left, const SymbolicMatrix& m, const RationalMatrix& right);

enum class DependenceSide { rows, cols };

struct DependenceCertificate {
  DependenceSide side;
  IntVector coefficients;  // primitive, first nonzero positive
};

/// A Q-linear dependence among the rows (checked first) or the columns.
std::optional<DependenceCertificate> row_col_dependence(const SymbolicMatrix& m);

/// Exact coefficientwise check that the certificate annihilates its side.
bool verify_dependence(const SymbolicMatrix& m, const DependenceCertificate& cert);

/// Block-diagonal sum of a and b over the same space.
SymbolicMatrix direct_sum(const SymbolicMatrix& a, const SymbolicMatrix& b);

}  // namespace transcert
