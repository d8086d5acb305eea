#include "transcert/symbolic_matrix.hpp"

#include <algorithm>
#include <set>

namespace transcert {

SymbolSpace::SymbolSpace(std::vector<std::string> names, bool includes_one) : includes_one_(includes_one) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw PreconditionError("symbol names must be nonempty");
    if (!seen.insert(n).second) throw PreconditionError("duplicate symbol name '" + n + "'");
  }
  auto it = std::find(names.begin(), names.end(), kOne);
  if (includes_one) {
    if (it != names.end()) names.erase(it);
    names.insert(names.begin(), kOne);
  } else if (it != names.end()) {
    throw PreconditionError("symbol '1' is reserved for the constant; set includes_one");
  }
  names_ = std::move(names);
}

std::optional<std::size_t> SymbolSpace::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

SymbolicMatrix::SymbolicMatrix(SymbolSpace space, std::size_t rows, std::size_t cols)
    : space_(std::move(space)), rows_(rows), cols_(cols), entries_(rows * cols, LinCombo(space_.size(), 0)) {}

void SymbolicMatrix::add(std::size_t i, std::size_t j, std::size_t symbol, const Rational& c) {
  at(i, j).at(symbol) += c;
}

std::vector<RationalMatrix> decompose(const SymbolicMatrix& m) {
  std::vector<RationalMatrix> parts(m.space().size(), RationalMatrix(m.rows(), m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t s = 0; s < parts.size(); ++s) parts[s](i, j) = m.at(i, j)[s];
  return parts;
}

SymbolicMatrix reassemble(const SymbolSpace& space, const std::vector<RationalMatrix>& parts) {
  if (parts.size() != space.size()) throw PreconditionError("one component per symbol required");
  const std::size_t rows = parts.empty() ? 0 : parts[0].rows();
  const std::size_t cols = parts.empty() ? 0 : parts[0].cols();
  SymbolicMatrix m(space, rows, cols);
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (parts[s].rows() != rows || parts[s].cols() != cols) throw PreconditionError("component shapes differ");
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j)[s] = parts[s](i, j);
  }
  return m;
}

PolyMatrix generic_matrix(const SymbolicMatrix& m) {
  const std::size_t r = m.space().size();
  PolyMatrix out = make_poly_matrix(m.rows(), m.cols(), r);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      MultiPoly p(r);
      Exponents e(r, 0);
      for (std::size_t s = 0; s < r; ++s) {
        e[s] = 1;
        p.add_term(e, m.at(i, j)[s]);
        e[s] = 0;
      }
      out(i, j) = std::move(p);
    }
  }
  return out;
}

PolyRank structural_rank_certified(const SymbolicMatrix& m, const PolyRankOptions& options) {
  return rank_poly_certified(generic_matrix(m), options);
}

std::size_t structural_rank(const SymbolicMatrix& m, const PolyRankOptions& options) {
  return structural_rank_certified(m, options).rank;
}

std::size_t specialized_rank(const SymbolicMatrix& m, const PolyRankOptions& options) {
  PolyMatrix mx = generic_matrix(m);
  if (m.space().includes_one()) {
    for (auto& e : mx.data()) e = e.substitute(m.space().one_index(), Rational(1));
  }
  return rank_poly(mx, options);
}

SymbolicMatrix basis_change(const SymbolicMatrix& m, const RationalMatrix& new_basis,
                            std::vector<std::string> new_names) {
  const std::size_t r = m.space().size();
  if (new_basis.rows() != r || new_basis.cols() != r) throw PreconditionError("basis change must be r x r");
  const RationalMatrix inv = inverse_Q(new_basis);
  const bool one = m.space().includes_one();
  if (one) {
    const std::size_t o = m.space().one_index();
    for (std::size_t k = 0; k < r; ++k) {
      if (new_basis(k, o) != (k == o ? 1 : 0) || new_basis(o, k) != (k == o ? 1 : 0)) {
        throw PreconditionError("basis change must fix the constant symbol");
      }
    }
  }
  if (new_names.empty()) {
    for (const auto& n : m.space().names()) new_names.push_back(n == SymbolSpace::kOne ? n : n + "'");
  }
  SymbolSpace space(std::move(new_names), one);
  if (space.size() != r) throw PreconditionError("wrong number of new symbol names");
  SymbolicMatrix out(space, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = inv * m.at(i, j);
  return out;
}

SymbolicMatrix multiply(const RationalMatrix& left, const SymbolicMatrix& m, const RationalMatrix& right) {
  if (left.cols() != m.rows() || right.rows() != m.cols()) throw PreconditionError("shape mismatch in L*M*R");
  auto parts = decompose(m);
  for (auto& p : parts) p = left * p * right;
  return reassemble(m.space(), parts);
}

namespace {

// Column j of the result is the flattened coefficient vector of row j (rows
// side) or of column j (cols side).
RationalMatrix flatten(const SymbolicMatrix& m, DependenceSide side) {
  const std::size_t r = m.space().size();
  const bool rows = side == DependenceSide::rows;
  const std::size_t count = rows ? m.rows() : m.cols();
  const std::size_t length = (rows ? m.cols() : m.rows()) * r;
  RationalMatrix out(length, count);
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t k = 0; k < (rows ? m.cols() : m.rows()); ++k) {
      const LinCombo& e = rows ? m.at(v, k) : m.at(k, v);
      for (std::size_t s = 0; s < r; ++s) out(k * r + s, v) = e[s];
    }
  }
  return out;
}

}  // namespace

std::optional<DependenceCertificate> row_col_dependence(const SymbolicMatrix& m) {
  for (auto side : {DependenceSide::rows, DependenceSide::cols}) {
    const auto rk = rank_kernel_Q(flatten(m, side));
    if (!rk.kernel.empty()) return DependenceCertificate{side, rk.kernel.front()};
  }
  return std::nullopt;
}

bool verify_dependence(const SymbolicMatrix& m, const DependenceCertificate& cert) {
  const bool rows = cert.side == DependenceSide::rows;
  const std::size_t count = rows ? m.rows() : m.cols();
  const std::size_t other = rows ? m.cols() : m.rows();
  if (cert.coefficients.size() != count) return false;
  if (is_zero_vector(std::span<const Integer>(cert.coefficients))) return false;
  for (std::size_t k = 0; k < other; ++k) {
    LinCombo acc(m.space().size(), 0);
    for (std::size_t v = 0; v < count; ++v) {
      const LinCombo& e = rows ? m.at(v, k) : m.at(k, v);
      for (std::size_t s = 0; s < acc.size(); ++s) acc[s] += Rational(cert.coefficients[v]) * e[s];
    }
    if (!is_zero_vector(std::span<const Rational>(acc))) return false;
  }
  return true;
}

SymbolicMatrix direct_sum(const SymbolicMatrix& a, const SymbolicMatrix& b) {
  if (!(a.space() == b.space())) throw PreconditionError("direct sum needs a common symbol space");
  SymbolicMatrix out(a.space(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

}  // namespace transcert
