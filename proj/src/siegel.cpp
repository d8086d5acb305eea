#include "transcert/siegel.hpp"

#include <map>

#include "transcert/lattice.hpp"

namespace transcert {

namespace {

bool better(const IntVector& cand, const IntVector& best) {
  if (best.empty()) return true;
  const Integer a = max_abs(cand), b = max_abs(best);
  if (a != b) return a < b;
  return cand < best;
}

}  // namespace

void siegel_check_preconditions(const IntegerMatrix& a, const Integer& h_bound) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0) throw PreconditionError("siegel: need at least one equation (M > 0)");
  if (n <= 2 * m) throw PreconditionError("siegel: need N > 2M, got M=" + std::to_string(m) + " N=" + std::to_string(n));
  if (h_bound <= 0) throw PreconditionError("siegel: H must be positive");
  for (const auto& x : a.data()) {
    if (abs(x) >= h_bound) throw PreconditionError("siegel: entry " + to_string(x) + " violates |a_ij| < H");
  }
}

bool siegel_verify(const IntegerMatrix& a, const Integer& h_bound, const IntVector& b) {
  if (b.size() != a.cols() || is_zero_vector(std::span<const Integer>(b))) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * b[j];
    if (s != 0) return false;
  }
  const Integer bound = 2 * Integer(static_cast<unsigned long>(a.cols())) * h_bound;
  return max_abs(b) < bound;
}

IntVector siegel_pigeonhole(const IntegerMatrix& a, const Integer& h_bound, std::uint64_t budget) {
  siegel_check_preconditions(a, h_bound);
  const std::size_t n = a.cols();
  const Integer radius = Integer(static_cast<unsigned long>(n)) * h_bound;
  if (!radius.fits_slong_p()) throw PreconditionError("siegel: N*H too large for enumeration");
  const long r = radius.get_si();
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<long double>(2 * r + 1);
  if (total > static_cast<long double>(budget)) throw PreconditionError("siegel: pigeonhole box exceeds budget");

  std::map<IntVector, IntVector> seen;
  IntVector b(n, Integer(-r));
  while (true) {
    IntVector image = a * b;
    auto [it, inserted] = seen.try_emplace(image, b);
    if (!inserted) {
      IntVector diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = b[i] - it->second[i];
      return primitive_integer(std::span<const Integer>(diff));
    }
    std::size_t pos = 0;
    while (pos < n && b[pos] == r) b[pos++] = -r;
    if (pos == n) break;
    ++b[pos];
  }
  throw SolverFailure("siegel: pigeonhole enumeration found no collision");
}

IntVector siegel_solve(const IntegerMatrix& a, const Integer& h_bound, const SiegelOptions& options) {
  siegel_check_preconditions(a, h_bound);
  if (options.pigeonhole) return siegel_pigeonhole(a, h_bound, options.budget);

  IntegerMatrix kernel = integer_kernel(a);
  if (kernel.cols() == 0) throw SolverFailure("siegel: empty kernel despite N > 2M");
  kernel = size_reduce(lll_reduce(kernel));

  IntVector best;
  for (std::size_t j = 0; j < kernel.cols(); ++j) {
    IntVector v = primitive_integer(std::span<const Integer>(kernel.col(j)));
    if (better(v, best)) best = v;
  }
  if (siegel_verify(a, h_bound, best)) return best;

  // Small combinations of the reduced basis, coefficients in [-R, R].
  const std::size_t k = kernel.cols();
  const int r = options.search_radius;
  std::vector<int> c(k, -r);
  std::uint64_t tried = 0;
  while (tried++ < options.budget) {
    IntVector v(a.cols(), 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (c[j] == 0) continue;
      for (std::size_t i = 0; i < a.cols(); ++i) v[i] += c[j] * kernel(i, j);
    }
    if (!is_zero_vector(std::span<const Integer>(v))) {
      v = primitive_integer(std::span<const Integer>(v));
      if (better(v, best)) best = v;
    }
    std::size_t pos = 0;
    while (pos < k && c[pos] == r) c[pos++] = -r;
    if (pos == k) break;
    ++c[pos];
  }
  if (siegel_verify(a, h_bound, best)) return best;
  throw SolverFailure("siegel: no kernel vector within the 2NH bound found by the configured search");
}

}  // namespace transcert
