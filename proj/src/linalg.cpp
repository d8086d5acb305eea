#include "transcert/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "transcert/rng.hpp"

namespace transcert {

PolyMatrix make_poly_matrix(std::size_t rows, std::size_t cols, std::size_t variable_count) {
  return PolyMatrix(rows, cols, MultiPoly(variable_count));
}

RowEchelon row_echelon(RationalMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

RankKernel rank_kernel_Q(const RationalMatrix& m) {
  const RowEchelon e = row_echelon(m);
  RankKernel out;
  out.rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    out.kernel.push_back(primitive_integer(std::span<const Rational>(v)));
  }
  return out;
}

std::vector<IntVector> left_kernel_Q(const RationalMatrix& m) { return rank_kernel_Q(m.transpose()).kernel; }

std::size_t rank_Q(const RationalMatrix& m) { return row_echelon(m).pivot_cols.size(); }

Rational determinant_Q(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RationalMatrix inverse_Q(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = row_echelon(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

RankProfile rank_profile_Q(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<std::size_t> row_perm(a.rows());
  std::iota(row_perm.begin(), row_perm.end(), 0);
  RankProfile out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      std::swap(row_perm[p], row_perm[r]);
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.rows.push_back(row_perm[r]);
    out.cols.push_back(c);
    ++r;
  }
  out.rank = r;
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

namespace {

// Smaller is a better pivot.
std::tuple<int, std::int64_t, std::size_t> pivot_cost(const MultiPoly& p) {
  return {p.is_constant() ? 0 : 1, p.total_degree(), p.term_count()};
}

}  // namespace

FractionFreeResult fraction_free_eliminate(const PolyMatrix& input) {
  PolyMatrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t nvars = a.zero().variable_count();
  std::vector<std::size_t> row_ids(rows), col_ids(cols);
  std::iota(row_ids.begin(), row_ids.end(), 0);
  std::iota(col_ids.begin(), col_ids.end(), 0);

  FractionFreeResult out;
  out.determinant = MultiPoly(nvars);
  MultiPoly prev = MultiPoly::constant(nvars, Rational(1));
  int sign = 1;
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t k = 0; k < steps; ++k) {
    // Full pivot search over the trailing submatrix.
    std::size_t bi = rows, bj = cols;
    std::tuple<int, std::int64_t, std::size_t> best{};
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        const MultiPoly& e = a(i, j);
        if (e.is_zero()) continue;
        auto cost = pivot_cost(e);
        if (bi == rows || cost < best) {
          best = cost;
          bi = i;
          bj = j;
          if (std::get<0>(cost) == 0) break;
        }
      }
      if (bi != rows && std::get<0>(best) == 0) break;
    }
    if (bi == rows) break;
    if (bi != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(bi, j), a(k, j));
      std::swap(row_ids[bi], row_ids[k]);
      sign = -sign;
    }
    if (bj != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, bj), a(i, k));
      std::swap(col_ids[bj], col_ids[k]);
      sign = -sign;
    }

    const MultiPoly pivot = a(k, k);
    const bool same_scale = pivot == prev;
    const bool prev_const = prev.is_constant();
    const Rational prev_inv = prev_const ? Rational(1) / prev.constant_term() : Rational(0);
    const bool pivot_const = pivot.is_constant();
    const Rational pivot_c = pivot_const ? pivot.constant_term() : Rational(0);

    auto divide_prev = [&](MultiPoly& x) {
      if (x.is_zero()) return;
      if (prev_const) {
        x *= prev_inv;
      } else {
        x = exact_divide(x, prev);
      }
    };

    for (std::size_t i = k + 1; i < rows; ++i) {
      const MultiPoly aik = a(i, k);
      if (aik.is_zero() && same_scale) continue;
      for (std::size_t j = k + 1; j < cols; ++j) {
        MultiPoly& x = a(i, j);
        const MultiPoly& akj = a(k, j);
        if (x.is_zero() && (aik.is_zero() || akj.is_zero())) continue;
        if (pivot_const) {
          x *= pivot_c;
        } else if (!x.is_zero()) {
          x = pivot * x;
        }
        if (!aik.is_zero() && !akj.is_zero()) x -= aik * akj;
        divide_prev(x);
      }
      a(i, k) = MultiPoly(nvars);
    }
    out.pivot_rows.push_back(row_ids[k]);
    out.pivot_cols.push_back(col_ids[k]);
    prev = pivot;
    ++out.rank;
  }

  if (rows == cols && out.rank == rows) {
    out.determinant = rows == 0 ? MultiPoly::constant(nvars, Rational(1)) : prev;
    if (sign < 0) out.determinant = -out.determinant;
  } else if (rows == cols && rows == 0) {
    out.determinant = MultiPoly::constant(nvars, Rational(1));
  }
  return out;
}

MultiPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  return fraction_free_eliminate(m).determinant;
}

RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i].evaluate(point);
  return out;
}

PolyRank rank_poly_certified(const PolyMatrix& m, const PolyRankOptions& options) {
  PolyRank out;
  if (std::min(m.rows(), m.cols()) <= options.exact_threshold) {
    auto r = fraction_free_eliminate(m);
    out.rank = r.rank;
    out.rows = r.pivot_rows;
    out.cols = r.pivot_cols;
    std::sort(out.rows.begin(), out.rows.end());
    std::sort(out.cols.begin(), out.cols.end());
    return out;
  }

  // Schwartz-Zippel: an evaluation never exceeds the generic rank, and the
  // maximum over independent trials reaches it with high probability.
  out.randomized = true;
  Rng rng(options.seed);
  const std::size_t nvars = m.zero().variable_count();
  RankProfile best;
  for (std::size_t t = 0; t < std::max<std::size_t>(options.trials, 1); ++t) {
    RatVector point(nvars);
    for (auto& x : point) x = Rational(rng.uniform_integer(1, 1'000'000));
    RankProfile prof = rank_profile_Q(evaluate(m, point));
    if (prof.rank > best.rank || t == 0) best = prof;
  }
  const MultiPoly minor_det = determinant(m.submatrix(best.rows, best.cols));
  if (best.rank > 0 && minor_det.is_zero()) throw SolverFailure("certificate minor vanished symbolically");
  out.rank = best.rank;
  out.rows = best.rows;
  out.cols = best.cols;
  return out;
}

std::size_t rank_poly(const PolyMatrix& m, const PolyRankOptions& options) {
  return rank_poly_certified(m, options).rank;
}

}  // namespace transcert
