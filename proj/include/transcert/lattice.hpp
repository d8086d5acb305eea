#pragma once

#include <cstdint>
#include <vector>

#include "transcert/matrix.hpp"

namespace transcert {

/// Row-style Hermite normal form: H = U * A with U unimodular, H in row
/// echelon form, positive pivots, entries above each pivot in [0, pivot),
/// zero rows last.
struct HermiteForm {
  IntegerMatrix h;
  IntegerMatrix u;
  std::size_t rank = 0;
};

HermiteForm hermite_form(const IntegerMatrix& a);

/// Smith normal form: S = U * A * V, diagonal d_1 | d_2 | ... with d_i >= 0.
struct SmithForm {
  IntegerMatrix s;
  IntegerMatrix u;
  IntegerMatrix v;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_form(const IntegerMatrix& a);

struct NormalForms {
  HermiteForm hermite;
  SmithForm smith;
};

NormalForms hnf_snf(const IntegerMatrix& a);

/// Exact determinant of a square integer matrix (Bareiss over Z).
Integer determinant_Z(const IntegerMatrix& a);

/// Basis of {x in Z^cols : A x = 0} as columns, in canonical column HNF.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

/// Canonical basis of the lattice generated by the columns of `generators`:
/// columns of the transposed row HNF, zero columns dropped.
IntegerMatrix canonical_lattice_basis(const IntegerMatrix& generators);

/// True when every column of `x` lies in the lattice spanned by `basis`.
bool lattice_contains(const IntegerMatrix& basis, const IntVector& x);

/// Pairwise size reduction of a column basis: b_j -= round(<b_j,b_i>/<b_i,b_i>) b_i
/// whenever that strictly shortens b_j, sweeping until nothing changes.
/// Columns must be independent.
IntegerMatrix size_reduce(const IntegerMatrix& basis);

/// LLL reduction of a column basis with exact rational Gram-Schmidt.
IntegerMatrix lll_reduce(const IntegerMatrix& basis, const Rational& delta = Rational(3, 4));

/// Number of classes of the box {0..t}^m in Z^m / H, where the columns of
/// h_basis (m x h) are an independent basis of H. Counted in Smith
/// coordinates, where the quotient is (+) Z/d_i (+) Z^(m-h).
std::uint64_t image_count(const IntegerMatrix& h_basis, std::size_t m, std::uint64_t t);

}  // namespace transcert
