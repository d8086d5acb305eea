#pragma once

#include <cstdint>

#include "transcert/rational.hpp"

namespace transcert {

/// Integral minimal polynomial c*x^d - b_{d-1} x^{d-1} - ... - b_0, stored as
/// the leading coefficient and the right-hand side coefficients b_0..b_{d-1}.
struct MinPolyData {
  Integer leading;  // c, nonzero
  IntVector lower;  // b_0 .. b_{d-1}; size() is the degree d

  std::size_t degree() const noexcept { return lower.size(); }
};

/// Integers a_{j,0..d-1} with (c*alpha)^j = sum_s a_{j,s} alpha^s, via the
/// recurrence a_{j,0} = a_{j-1,d-1} b_0, a_{j,s} = a_{j-1,d-1} b_s + c a_{j-1,s-1}.
IntVector power_basis_coeffs(const MinPolyData& m, std::uint64_t j);

}  // namespace transcert
