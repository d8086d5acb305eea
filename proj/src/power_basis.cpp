#include "transcert/power_basis.hpp"

#include "transcert/errors.hpp"

namespace transcert {

IntVector power_basis_coeffs(const MinPolyData& m, std::uint64_t j) {
  const std::size_t d = m.degree();
  if (d == 0) throw PreconditionError("minimal polynomial must have positive degree");
  if (m.leading == 0) throw PreconditionError("leading coefficient must be nonzero");

  IntVector a(d, 0);
  a[0] = 1;
  IntVector next(d);
  for (std::uint64_t step = 0; step < j; ++step) {
    const Integer top = a[d - 1];
    next[0] = top * m.lower[0];
    for (std::size_t s = 1; s < d; ++s) next[s] = top * m.lower[s] + m.leading * a[s - 1];
    a.swap(next);
  }
  return a;
}

}  // namespace transcert
