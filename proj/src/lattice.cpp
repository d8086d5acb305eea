#include "transcert/lattice.hpp"

#include <algorithm>
#include <set>

#include "transcert/linalg.hpp"

namespace transcert {

namespace {

IntegerMatrix identity_Z(std::size_t n) { return IntegerMatrix::identity(n, Integer(1), Integer(0)); }

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void row_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
  }
}

void col_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
  }
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to num/den, halves rounded toward +infinity.
Integer round_div(const Integer& num, const Integer& den) {
  Integer twice = 2 * num + den;
  Integer d2 = 2 * den;
  return floor_div(twice, d2);
}

}  // namespace

HermiteForm hermite_form(const IntegerMatrix& a) {
  HermiteForm out;
  out.h = a;
  out.u = identity_Z(a.rows());
  IntegerMatrix& h = out.h;
  IntegerMatrix& u = out.u;
  const std::size_t rows = a.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows; ++c) {
    while (true) {
      // Smallest nonzero entry at or below row r in column c becomes the pivot.
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) != 0 && (best == rows || abs(h(i, c)) < abs(h(best, c)))) best = i;
      }
      if (best == rows) break;
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        const Integer q = trunc_div(h(i, c), h(r, c));
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(h(i, c), h(r, c));
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

SmithForm smith_form(const IntegerMatrix& a) {
  SmithForm out;
  out.s = a;
  out.u = identity_Z(a.rows());
  out.v = identity_Z(a.cols());
  IntegerMatrix& s = out.s;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s(i, j) != 0 && (bi == rows || abs(s(i, j)) < abs(s(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    swap_rows(s, t, bi);
    swap_rows(out.u, t, bi);
    swap_cols(s, t, bj);
    swap_cols(out.v, t, bj);

    while (true) {
      bool changed = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        const Integer q = trunc_div(s(i, t), s(t, t));
        row_axpy(s, i, t, q);
        row_axpy(out.u, i, t, q);
        if (s(i, t) != 0) {
          swap_rows(s, t, i);
          swap_rows(out.u, t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        const Integer q = trunc_div(s(t, j), s(t, t));
        col_axpy(s, j, t, q);
        col_axpy(out.v, j, t, q);
        if (s(t, j) != 0) {
          swap_cols(s, t, j);
          swap_cols(out.v, t, j);
          changed = true;
        }
      }
      if (changed) continue;
      // Enforce d_t | every remaining entry by folding an offending row in.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_axpy(s, t, bad, Integer(-1));
      row_axpy(out.u, t, bad, Integer(-1));
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(out.u, t);
    }
    ++out.rank;
  }
  return out;
}

NormalForms hnf_snf(const IntegerMatrix& a) { return {hermite_form(a), smith_form(a)}; }

Integer determinant_Z(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw PreconditionError("determinant of a non-square matrix");
  IntegerMatrix a = input;
  const std::size_t n = a.rows();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      swap_rows(a, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * prev);
}

IntegerMatrix canonical_lattice_basis(const IntegerMatrix& generators) {
  const HermiteForm hf = hermite_form(generators.transpose());
  IntegerMatrix basis(generators.rows(), hf.rank);
  for (std::size_t j = 0; j < hf.rank; ++j)
    for (std::size_t i = 0; i < generators.rows(); ++i) basis(i, j) = hf.h(j, i);
  return basis;
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  // U * A^T = H; rows of U against zero rows of H span the kernel of A.
  const HermiteForm hf = hermite_form(a.transpose());
  const std::size_t n = a.cols();
  IntegerMatrix gens(n, n - hf.rank);
  for (std::size_t r = hf.rank; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i) gens(i, r - hf.rank) = hf.u(r, i);
  return canonical_lattice_basis(gens);
}

bool lattice_contains(const IntegerMatrix& basis, const IntVector& x) {
  if (x.size() != basis.rows()) throw PreconditionError("vector length differs from lattice dimension");
  // Solve basis * c = x over Q, then insist on integrality.
  RationalMatrix aug(basis.rows(), basis.cols() + 1);
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < basis.cols(); ++j) aug(i, j) = Rational(basis(i, j));
    aug(i, basis.cols()) = Rational(x[i]);
  }
  const RowEchelon e = row_echelon(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == basis.cols()) return false;
  // A redundant generating set still yields some solution; check the one with
  // free coordinates zero, which is integral whenever the columns are a basis.
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.reduced(r, basis.cols()).get_den() != 1) return false;
  }
  return true;
}

IntegerMatrix size_reduce(const IntegerMatrix& basis) {
  std::vector<IntVector> b = columns_of(basis);
  const std::size_t k = b.size();
  std::vector<Integer> norms(k);
  for (std::size_t i = 0; i < k; ++i) {
    norms[i] = dot(b[i], b[i]);
    if (norms[i] == 0) throw PreconditionError("size_reduce: zero column in basis");
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        if (i == j) continue;
        const Integer q = round_div(dot(b[j], b[i]), norms[i]);
        if (q == 0) continue;
        IntVector cand = b[j];
        for (std::size_t t = 0; t < cand.size(); ++t) cand[t] -= q * b[i][t];
        const Integer n2 = dot(cand, cand);
        if (n2 < norms[j]) {
          b[j] = std::move(cand);
          norms[j] = n2;
          changed = true;
        }
      }
    }
  }
  return from_columns(basis.rows(), b);
}

IntegerMatrix lll_reduce(const IntegerMatrix& basis, const Rational& delta) {
  std::vector<IntVector> b = columns_of(basis);
  const std::size_t n = b.size();
  if (n == 0) return basis;
  const std::size_t dim = basis.rows();

  std::vector<RatVector> bstar(n, RatVector(dim));
  std::vector<Rational> bnorm(n);
  std::vector<RatVector> mu(n, RatVector(n));

  auto gram_schmidt = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < dim; ++t) bstar[i][t] = Rational(b[i][t]);
      for (std::size_t j = 0; j < i; ++j) {
        Rational d = 0;
        for (std::size_t t = 0; t < dim; ++t) d += Rational(b[i][t]) * bstar[j][t];
        mu[i][j] = d / bnorm[j];
        for (std::size_t t = 0; t < dim; ++t) bstar[i][t] -= mu[i][j] * bstar[j][t];
      }
      bnorm[i] = 0;
      for (std::size_t t = 0; t < dim; ++t) bnorm[i] += bstar[i][t] * bstar[i][t];
      if (bnorm[i] == 0) throw PreconditionError("lll_reduce: dependent columns");
    }
  };

  gram_schmidt();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      const Rational& m = mu[k][jj];
      if (abs(m) * 2 <= 1) continue;
      const Integer q = round_div(m.get_num(), m.get_den());
      for (std::size_t t = 0; t < dim; ++t) b[k][t] -= q * b[jj][t];
      for (std::size_t t = 0; t < jj; ++t) mu[k][t] -= Rational(q) * mu[jj][t];
      mu[k][jj] -= Rational(q);
    }
    if (bnorm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bnorm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return from_columns(dim, b);
}

std::uint64_t image_count(const IntegerMatrix& h_basis, std::size_t m, std::uint64_t t) {
  if (h_basis.rows() != m) throw PreconditionError("image_count: basis columns must lie in Z^m");
  const std::size_t h = h_basis.cols();
  if (rank_Q(to_rational(h_basis)) != h) throw PreconditionError("image_count: basis columns are dependent");
  long double points = 1;
  for (std::size_t i = 0; i < m; ++i) points *= static_cast<long double>(t + 1);
  if (points > 5e7L) throw PreconditionError("image_count: box too large to enumerate");

  const SmithForm sf = smith_form(h_basis);
  const auto d = sf.diagonal();
  std::set<IntVector> classes;
  std::vector<std::uint64_t> x(m, 0);
  IntVector key(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) {
      Integer y = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (x[j] != 0) y += sf.u(i, j) * Integer(static_cast<unsigned long>(x[j]));
      }
      if (i < h) mpz_fdiv_r(y.get_mpz_t(), y.get_mpz_t(), d[i].get_mpz_t());
      key[i] = y;
    }
    classes.insert(key);
    std::size_t pos = 0;
    while (pos < m && x[pos] == t) x[pos++] = 0;
    if (pos == m) break;
    ++x[pos];
  }
  return classes.size();
}

}  // namespace transcert
