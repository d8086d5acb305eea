#pragma once

#include <cstdint>

#include "transcert/matrix.hpp"

namespace transcert {

struct SiegelOptions {
  /// Use the pigeonhole enumeration directly (reference path; tiny N*H only).
  bool pigeonhole = false;
  /// Coefficient radius for the fallback search over kernel-basis combinations.
  int search_radius = 2;
  /// Maximum number of candidate vectors tried by any enumeration.
  std::uint64_t budget = 5'000'000;
};

/// Nonzero b with A b = 0 and max |b_i| < 2 N H, for an M x N integer matrix
/// with N > 2M and all |a_ij| < H.
///
/// Strategy: integer kernel via HNF, LLL and pairwise size reduction, then a
/// bounded search over small combinations of the reduced kernel basis.
/// Throws PreconditionError for bad inputs and SolverFailure if the
/// configured strategy finds nothing within the bound.
IntVector siegel_solve(const IntegerMatrix& a, const Integer& h_bound, const SiegelOptions& options = {});

/// Literal Dirichlet box argument: enumerate b with |b_i| <= N H until two
/// give the same A b and return their difference. Exponential; oracle only.
IntVector siegel_pigeonhole(const IntegerMatrix& a, const Integer& h_bound, std::uint64_t budget = 5'000'000);

/// Checks the preconditions; throws PreconditionError with a reason.
void siegel_check_preconditions(const IntegerMatrix& a, const Integer& h_bound);

/// b != 0, A b = 0 and max |b_i| < 2 N H.
bool siegel_verify(const IntegerMatrix& a, const Integer& h_bound, const IntVector& b);

}  // namespace transcert
