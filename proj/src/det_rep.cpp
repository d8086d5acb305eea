#include "transcert/det_rep.hpp"

#include <algorithm>

#include "transcert/rng.hpp"

namespace transcert {

AffineMatrix::AffineMatrix(PolyMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw PreconditionError("affine matrix must be square");
  for (const auto& e : m_.data()) {
    if (e.total_degree() > 1) throw PreconditionError("affine matrix entry has degree > 1");
  }
}

std::pair<PolyMatrix, PolyMatrix> factor_ab(const PolyMatrix& n, std::int64_t degree_bound) {
  if (n.rows() != n.cols()) throw PreconditionError("factor_ab: matrix must be square");
  if (degree_bound < 1) throw PreconditionError("factor_ab: degree bound must be >= 1");
  const std::size_t m = n.rows();
  const std::size_t nv = n.zero().variable_count();
  for (const auto& e : n.data()) {
    if (e.total_degree() > degree_bound) throw PreconditionError("factor_ab: entry exceeds the degree bound");
  }
  const std::size_t blocks = nv + 1;
  PolyMatrix a = make_poly_matrix(m, m * blocks, nv);
  PolyMatrix b = make_poly_matrix(m * blocks, m, nv);

  for (std::size_t l = 0; l < blocks; ++l) {
    const MultiPoly x = l < nv ? MultiPoly::variable(nv, l) : MultiPoly::constant(nv, Rational(1));
    for (std::size_t k = 0; k < m; ++k) b(l * m + k, k) = x;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [e, c] : n(i, j).terms()) {
        auto it = std::find_if(e.begin(), e.end(), [](std::uint32_t v) { return v != 0; });
        if (it == e.end()) {
          a(i, nv * m + j).add_term(e, c);
        } else {
          const auto l = static_cast<std::size_t>(it - e.begin());
          Exponents f = e;
          --f[l];
          a(i, l * m + j).add_term(f, c);
        }
      }
    }
  }
  return {std::move(a), std::move(b)};
}

PolyMatrix embed_square(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t m = a.rows();
  const std::size_t s = a.cols();
  if (b.rows() != s || b.cols() != m) throw PreconditionError("embed_square: need A m x s and B s x m");
  const std::size_t nv = a.zero().variable_count();
  PolyMatrix out = make_poly_matrix(m + s, m + s, nv);
  const MultiPoly one = MultiPoly::constant(nv, Rational(1));
  for (std::size_t i = 0; i < s; ++i) {
    out(i, i) = one;
    for (std::size_t j = 0; j < m; ++j) out(i, s + j) = b(i, j);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < s; ++j) out(s + i, j) = -a(i, j);
  return out;
}

PolyMatrix prune_unit_lines(const PolyMatrix& input) {
  PolyMatrix m = input;
  const MultiPoly one = MultiPoly::constant(m.zero().variable_count(), Rational(1));
  bool changed = true;
  while (changed && m.rows() > 1) {
    changed = false;
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (!(m(k, k) == one)) continue;
      bool col_unit = true, row_unit = true;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i != k && !m(i, k).is_zero()) col_unit = false;
        if (i != k && !m(k, i).is_zero()) row_unit = false;
      }
      if (!col_unit && !row_unit) continue;
      // Laplace expansion along a unit line at (k, k) has sign +1.
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (i != k) keep.push_back(i);
      m = m.submatrix(keep, keep);
      changed = true;
      break;
    }
  }
  return m;
}

AffineMatrix determinantal_rep(const MultiPoly& p, const DetRepOptions& options) {
  const std::size_t nv = p.variable_count();
  PolyMatrix n = make_poly_matrix(1, 1, nv);
  n(0, 0) = p;
  for (std::int64_t d = p.total_degree(); d > 1; --d) {
    auto [a, b] = factor_ab(n, d);
    n = embed_square(a, b);
  }
  if (options.prune) n = prune_unit_lines(n);
  return AffineMatrix(std::move(n));
}

RepCheck verify_rep(const AffineMatrix& n, const MultiPoly& p, SymbolicMode) {
  if (n.matrix().zero().variable_count() != p.variable_count()) return {false, std::nullopt};
  return {determinant(n.matrix()) == p, std::nullopt};
}

RepCheck verify_rep(const AffineMatrix& n, const MultiPoly& p, RandomizedMode mode) {
  const std::size_t nv = p.variable_count();
  if (n.matrix().zero().variable_count() != nv) return {false, std::nullopt};
  Rng rng(mode.seed);
  RepCheck out{true, std::nullopt};
  for (std::size_t t = 0; t < mode.trials && out.verified; ++t) {
    RatVector point(nv);
    for (auto& x : point) x = Rational(rng.uniform_integer(-mode.range, mode.range));
    if (determinant_Q(evaluate(n.matrix(), point)) != p.evaluate(point)) out.verified = false;
  }
  // det(N) - p has degree at most max(dim, deg p); Schwartz-Zippel per trial.
  const auto deg = std::max<std::int64_t>(static_cast<std::int64_t>(n.dimension()), p.total_degree());
  const Rational per_trial(Integer(static_cast<long>(deg)), Integer(static_cast<long>(2 * mode.range + 1)));
  out.false_pass_bound = pow(per_trial, static_cast<std::int64_t>(mode.trials));
  return out;
}

}  // namespace transcert
