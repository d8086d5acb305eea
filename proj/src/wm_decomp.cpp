#include "transcert/wm_decomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "transcert/errors.hpp"
#include "transcert/linalg.hpp"
#include "transcert/rng.hpp"

namespace transcert {

RankThreshold rank_threshold(const SymbolicMatrix& m) {
  RankThreshold out;
  out.structural_rank = structural_rank(m);
  const long rows = static_cast<long>(m.rows());
  const long cols = static_cast<long>(m.cols());
  out.threshold = rows + cols == 0
                      ? Rational(0)
                      : make_rational(static_cast<unsigned long>(rows * cols),
                                      static_cast<unsigned long>(rows + cols));
  out.hypothesis = Rational(static_cast<long>(out.structural_rank)) < out.threshold;
  return out;
}

namespace {

bool meets_threshold(std::size_t mp, std::size_t np, std::size_t m, std::size_t n) {
  return mp * n + np * m > m * n;
}

}  // namespace

ZeroBlockCheck verify_zero_block(const SymbolicMatrix& m, const ZeroBlockCertificate& c) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (c.p.rows() != rows || c.p.cols() != rows || c.q.rows() != cols || c.q.cols() != cols)
    throw PreconditionError("verify_zero_block: P or Q has the wrong shape");
  if (c.m_prime == 0 || c.m_prime > rows || c.n_prime == 0 || c.n_prime > cols)
    throw PreconditionError("verify_zero_block: block dimensions out of range");
  if (determinant_Q(c.p) == 0) throw PreconditionError("verify_zero_block: P is singular");
  if (determinant_Q(c.q) == 0) throw PreconditionError("verify_zero_block: Q is singular");
  ZeroBlockCheck out;
  out.meets_threshold = meets_threshold(c.m_prime, c.n_prime, rows, cols);
  out.zero_block = true;
  const std::size_t r = m.space().size();
  for (std::size_t i = 0; i < c.m_prime && out.zero_block; ++i)
    for (std::size_t j = cols - c.n_prime; j < cols && out.zero_block; ++j) {
      LinCombo acc(r, Rational(0));
      for (std::size_t k = 0; k < rows; ++k) {
        if (c.p(i, k) == 0) continue;
        for (std::size_t l = 0; l < cols; ++l) {
          const Rational s = c.p(i, k) * c.q(l, j);
          if (s == 0) continue;
          const LinCombo& e = m.at(k, l);
          for (std::size_t t = 0; t < r; ++t) acc[t] += s * e[t];
        }
      }
      if (!is_zero_vector(acc)) {
        out.zero_block = false;
        out.witness = std::make_pair(i, j);
      }
    }
  return out;
}

std::vector<IntVector> primitive_vectors(std::size_t n, std::uint32_t height_bound) {
  std::vector<IntVector> out;
  if (n == 0 || height_bound == 0) return out;
  const long h = height_bound;
  std::vector<long> cur(n, -h);
  for (;;) {
    long g = 0;
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      g = std::gcd(g, cur[i]);
      if (first == n && cur[i] != 0) first = i;
    }
    if (g == 1 && cur[first] > 0) {
      IntVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = cur[i];
      out.push_back(std::move(v));
    }
    std::size_t pos = n;
    while (pos > 0 && cur[pos - 1] == h) cur[--pos] = -h;
    if (pos == 0) break;
    ++cur[pos - 1];
  }
  auto key = [](const IntVector& v) {
    Integer height = 0;
    std::size_t nnz = 0;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      height = std::max<Integer>(height, abs(v[i]));
      ++nnz;
      support.push_back(i);
    }
    return std::make_tuple(height, nnz, support);
  };
  std::stable_sort(out.begin(), out.end(), [&](const IntVector& a, const IntVector& b) {
    const auto ka = key(a);
    const auto kb = key(b);
    if (ka != kb) return ka < kb;
    return a < b;
  });
  return out;
}

namespace {

using Basis = std::vector<IntVector>;

// Subspace pair closure over the components M_1..M_r.
struct Closure {
  const std::vector<RationalMatrix>& parts;
  std::size_t m;
  std::size_t n;

  // {w : w^T M_i v = 0 for all i and v in V}
  Basis left_annihilator(const Basis& v) const {
    RationalMatrix stack(m, parts.size() * v.size());
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (std::size_t k = 0; k < v.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) {
          Rational s = 0;
          for (std::size_t j = 0; j < n; ++j) s += parts[p](i, j) * v[k][j];
          stack(i, p * v.size() + k) = s;
        }
    return left_kernel_Q(stack);
  }

  // {v : w^T M_i v = 0 for all i and w in W}
  Basis right_annihilator(const Basis& w) const {
    RationalMatrix stack(parts.size() * w.size(), n);
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (std::size_t k = 0; k < w.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) {
          Rational s = 0;
          for (std::size_t i = 0; i < m; ++i) s += w[k][i] * parts[p](i, j);
          stack(p * w.size() + k, j) = s;
        }
    return rank_kernel_Q(stack).kernel;
  }
};

RationalMatrix rows_matrix(const Basis& b, std::size_t n) {
  RationalMatrix out(b.size(), n);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = b[i][j];
  return out;
}

RatVector subspace_key(const Basis& b, std::size_t n) {
  const RowEchelon re = row_echelon(rows_matrix(b, n));
  RatVector key;
  for (std::size_t i = 0; i < re.pivot_cols.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) key.push_back(re.reduced(i, j));
  return key;
}

bool in_span(const Basis& b, const IntVector& v, std::size_t n) {
  Basis ext = b;
  ext.push_back(v);
  return rank_Q(rows_matrix(ext, n)) == b.size();
}

// P: rows of w first, then unit vectors; Q: unit vectors first, then columns of v.
ZeroBlockCertificate assemble(const Basis& w, const Basis& v, std::size_t m, std::size_t n) {
  ZeroBlockCertificate c;
  c.m_prime = w.size();
  c.n_prime = v.size();
  Basis prow = w;
  for (std::size_t i = 0; i < m && prow.size() < m; ++i) {
    IntVector e(m, Integer(0));
    e[i] = 1;
    if (!in_span(prow, e, m)) prow.push_back(e);
  }
  c.p = rows_matrix(prow, m);
  Basis qcols;
  for (std::size_t j = 0; j < n && qcols.size() + v.size() < n; ++j) {
    IntVector e(n, Integer(0));
    e[j] = 1;
    Basis trial = qcols;
    trial.insert(trial.end(), v.begin(), v.end());
    if (!in_span(trial, e, n)) qcols.push_back(e);
  }
  qcols.insert(qcols.end(), v.begin(), v.end());
  c.q = rows_matrix(qcols, n).transpose();
  return c;
}

std::optional<ZeroBlockCertificate> exhaustive_search(const SymbolicMatrix& sm, std::uint32_t height_bound) {
  const std::size_t m = sm.rows();
  const std::size_t n = sm.cols();
  const auto parts = decompose(sm);
  const Closure cl{parts, m, n};
  const auto candidates = primitive_vectors(n, height_bound);
  std::set<RatVector> visited;
  std::optional<ZeroBlockCertificate> found;

  auto dfs = [&](auto&& self, const Basis& v) -> void {
    for (const auto& cand : candidates) {
      if (found) return;
      if (in_span(v, cand, n)) continue;
      Basis ext = v;
      ext.push_back(cand);
      const Basis w = cl.left_annihilator(ext);
      if (w.empty()) continue;
      const Basis closed = cl.right_annihilator(w);
      if (!visited.insert(subspace_key(closed, n)).second) continue;
      if (meets_threshold(w.size(), closed.size(), m, n)) {
        found = assemble(w, closed, m, n);
        return;
      }
      // extending V past its closure strictly shrinks W
      if (w.size() > 1) self(self, closed);
    }
  };
  dfs(dfs, Basis{});
  return found;
}

std::optional<ZeroBlockCertificate> alternate_from(const Closure& cl, Basis w, std::size_t iters) {
  const std::size_t m = cl.m;
  const std::size_t n = cl.n;
  for (std::size_t it = 0; it < iters; ++it) {
    if (w.empty()) return std::nullopt;
    const Basis v = cl.right_annihilator(w);
    if (v.empty()) return std::nullopt;
    if (meets_threshold(w.size(), v.size(), m, n)) return assemble(w, v, m, n);
    const Basis grown = cl.left_annihilator(v);
    if (grown.size() == w.size()) return std::nullopt;
    w = grown;
  }
  return std::nullopt;
}

std::optional<ZeroBlockCertificate> alternating_search(const SymbolicMatrix& sm, const AlternatingStrategy& s) {
  const std::size_t m = sm.rows();
  const std::size_t n = sm.cols();
  const auto parts = decompose(sm);
  const Closure cl{parts, m, n};
  Rng rng(s.seed);
  for (std::size_t mp = 1; mp <= m; ++mp)
    for (std::size_t np = 1; np <= n; ++np) {
      if (!meets_threshold(mp, np, m, n)) continue;
      std::vector<Basis> starts;
      // coordinate subspaces on the row side
      std::vector<int> pick(m, 0);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(mp), 1);
      do {
        Basis w;
        for (std::size_t i = 0; i < m; ++i)
          if (pick[i]) {
            IntVector e(m, Integer(0));
            e[i] = 1;
            w.push_back(e);
          }
        starts.push_back(w);
      } while (std::prev_permutation(pick.begin(), pick.end()));
      // coordinate subspaces on the column side, closed to the row side
      std::vector<int> cpick(n, 0);
      std::fill(cpick.begin(), cpick.begin() + static_cast<long>(np), 1);
      do {
        Basis v;
        for (std::size_t j = 0; j < n; ++j)
          if (cpick[j]) {
            IntVector e(n, Integer(0));
            e[j] = 1;
            v.push_back(e);
          }
        starts.push_back(cl.left_annihilator(v));
      } while (std::prev_permutation(cpick.begin(), cpick.end()));
      Basis random_w;
      while (random_w.size() < mp) {
        IntVector r(m);
        for (auto& x : r) x = rng.uniform_integer(-3, 3);
        if (!is_zero_vector(r) && !in_span(random_w, r, m)) random_w.push_back(r);
      }
      starts.push_back(random_w);
      for (const auto& w0 : starts)
        if (auto c = alternate_from(cl, w0, s.iters)) return c;
    }
  return std::nullopt;
}

}  // namespace

std::optional<ZeroBlockCertificate> find_zero_block(const SymbolicMatrix& m, const ZeroBlockStrategy& strategy) {
  if (m.rows() == 0 || m.cols() == 0) return std::nullopt;
  std::optional<ZeroBlockCertificate> out;
  if (const auto* ex = std::get_if<ExhaustiveStrategy>(&strategy))
    out = exhaustive_search(m, ex->height_bound);
  else
    out = alternating_search(m, std::get<AlternatingStrategy>(strategy));
  if (out) {
    const auto check = verify_zero_block(m, *out);
    if (!check.zero_block || !check.meets_threshold)
      throw SolverFailure("find_zero_block: assembled certificate failed verification");
  }
  return out;
}

bool verify_mcc(const SymbolicMatrix& m, const MccWitness& witness) {
  if (witness.w.size() != m.rows() || witness.v.size() != m.cols()) return false;
  if (is_zero_vector(witness.w) || is_zero_vector(witness.v)) return false;
  const std::size_t r = m.space().size();
  LinCombo acc(r, Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational s = Rational(witness.w[i] * witness.v[j]);
      if (s == 0) continue;
      for (std::size_t t = 0; t < r; ++t) acc[t] += s * m.at(i, j)[t];
    }
  return is_zero_vector(acc);
}

std::optional<MccWitness> mcc_witness(const SymbolicMatrix& m, std::uint32_t height_bound) {
  if (m.rows() != m.cols()) throw PreconditionError("mcc_witness: matrix must be square");
  const auto parts = decompose(m);
  const Closure cl{parts, m.rows(), m.cols()};
  for (const auto& v : primitive_vectors(m.cols(), height_bound)) {
    const Basis w = cl.left_annihilator(Basis{v});
    if (w.empty()) continue;
    MccWitness out{w.front(), v};
    if (!verify_mcc(m, out)) throw SolverFailure("mcc_witness: witness failed verification");
    return out;
  }
  return std::nullopt;
}

const char* to_string(SixCase c) {
  switch (c) {
    case SixCase::hypothesis_not_met: return "hypothesis not met";
    case SixCase::rows: return "rows";
    case SixCase::cols: return "cols";
    case SixCase::counterexample_candidate: return "counterexample candidate";
  }
  return "";
}

SixExponentialsReport six_exponentials_check(const SymbolicMatrix& m) {
  if (m.rows() != 2 || m.cols() != 3) throw PreconditionError("six_exponentials_check: matrix must be 2x3");
  SixExponentialsReport rep;
  rep.structural_rank = structural_rank(m);
  if (rep.structural_rank >= 2) return rep;
  rep.dependence = row_col_dependence(m);
  rep.block = find_zero_block(m, ExhaustiveStrategy{2});
  if (!rep.dependence)
    rep.outcome = SixCase::counterexample_candidate;
  else
    rep.outcome = rep.dependence->side == DependenceSide::rows ? SixCase::rows : SixCase::cols;
  return rep;
}

}  // namespace transcert
