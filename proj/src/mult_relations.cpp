#include "transcert/mult_relations.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "transcert/errors.hpp"
#include "transcert/factor.hpp"
#include "transcert/lattice.hpp"
#include "transcert/linalg.hpp"

namespace transcert {

RationalTuple::RationalTuple(RatVector values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (v == 0) throw PreconditionError("RationalTuple: entries must be nonzero");
}

GeneratorMatrix::GeneratorMatrix(RationalMatrix x) : x_(std::move(x)) {
  for (const auto& v : x_.data())
    if (v == 0) throw PreconditionError("GeneratorMatrix: entries must be nonzero");
}

Rational power_product(const RationalTuple& t, std::span<const Integer> lambda) {
  if (lambda.size() != t.size()) throw PreconditionError("power_product: length mismatch");
  Rational out = 1;
  for (std::size_t i = 0; i < t.size(); ++i) out *= pow(t[i], lambda[i]);
  return out;
}

bool is_relation(const RationalTuple& t, std::span<const Integer> lambda) {
  return power_product(t, lambda) == 1;
}

namespace {

struct ExponentTable {
  std::vector<Integer> primes;
  // rows: primes then sign; cols: tuple entries
  std::vector<std::vector<long>> exps;
  std::vector<int> negative;
};

ExponentTable exponent_table(const RationalTuple& t) {
  std::vector<RationalFactorization> fs;
  std::set<Integer> primes;
  for (const auto& a : t.values()) {
    fs.push_back(factor_rational(a));
    for (const auto& [p, e] : fs.back().exponents)
      if (e != 0) primes.insert(p);
  }
  ExponentTable table;
  table.primes.assign(primes.begin(), primes.end());
  table.exps.assign(table.primes.size(), std::vector<long>(t.size(), 0));
  for (std::size_t i = 0; i < t.size(); ++i) {
    table.negative.push_back(fs[i].negative ? 1 : 0);
    for (std::size_t r = 0; r < table.primes.size(); ++r) {
      auto it = fs[i].exponents.find(table.primes[r]);
      if (it != fs[i].exponents.end()) table.exps[r][i] = it->second;
    }
  }
  return table;
}

}  // namespace

RelationLattice relation_lattice(const RationalTuple& t) {
  const std::size_t n = t.size();
  if (n == 0) return {IntegerMatrix(0, 0)};
  const ExponentTable table = exponent_table(t);
  const std::size_t k = table.primes.size();
  // [E 0; s 2] (lambda, mu) = 0
  IntegerMatrix system(k + 1, n + 1);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < n; ++i) system(r, i) = table.exps[r][i];
  for (std::size_t i = 0; i < n; ++i) system(k, i) = table.negative[i];
  system(k, n) = 2;
  const IntegerMatrix kernel = integer_kernel(system);
  IntegerMatrix projected(n, kernel.cols());
  for (std::size_t j = 0; j < kernel.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) projected(i, j) = kernel(i, j);
  return {canonical_lattice_basis(projected)};
}

bool vandermonde_hypothesis_holds(const RationalTuple& t, const MultiPoly& f, std::uint32_t l_bound) {
  const std::size_t n = t.size();
  if (f.is_zero()) throw PreconditionError("vandermonde: polynomial must be nonzero");
  if (f.variable_count() != n) throw PreconditionError("vandermonde: variable count differs from tuple length");
  for (std::size_t i = 0; i < n; ++i)
    if (f.degree_in(i) > l_bound) throw PreconditionError("vandermonde: degree in some variable exceeds L");
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= static_cast<std::uint64_t>(l_bound) + 1;
    if (points > kMaxVandermondePoints) throw PreconditionError("vandermonde: (L+1)^n exceeds the point cap");
  }
  RatVector cur = t.values();
  for (std::uint64_t z = 1; z <= points; ++z) {
    if (f.evaluate(cur) != 0) return false;
    for (std::size_t i = 0; i < n; ++i) cur[i] *= t[i];
  }
  return true;
}

IntVector vandermonde_relation(const RationalTuple& t, const MultiPoly& f, std::uint32_t l_bound) {
  if (!vandermonde_hypothesis_holds(t, f, l_bound))
    throw PreconditionError("vandermonde: f does not vanish at all required points");
  const std::size_t n = t.size();
  const ExponentTable table = exponent_table(t);
  std::map<std::vector<long>, std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> lambda(n, 0);
  for (;;) {
    std::vector<long> key(table.primes.size() + 1, 0);
    for (std::size_t r = 0; r < table.primes.size(); ++r)
      for (std::size_t i = 0; i < n; ++i) key[r] += table.exps[r][i] * static_cast<long>(lambda[i]);
    for (std::size_t i = 0; i < n; ++i) key.back() += table.negative[i] * static_cast<long>(lambda[i]);
    key.back() &= 1;
    auto [it, inserted] = seen.emplace(key, lambda);
    if (!inserted) {
      IntVector rel(n);
      for (std::size_t i = 0; i < n; ++i) rel[i] = Integer(lambda[i]) - Integer(it->second[i]);
      for (const auto& v : rel) {
        if (v == 0) continue;
        if (v < 0)
          for (auto& w : rel) w = -w;
        break;
      }
      if (!is_relation(t, rel)) throw SolverFailure("vandermonde: internal contradiction (collision is not a relation)");
      return rel;
    }
    std::size_t pos = n;
    while (pos > 0 && lambda[pos - 1] == l_bound) lambda[--pos] = 0;
    if (pos == 0) break;
    ++lambda[pos - 1];
  }
  throw SolverFailure("vandermonde: internal contradiction (hypothesis holds but all power products differ)");
}

XnSet enumerate_xn(const GeneratorMatrix& g, std::uint64_t n_bound) {
  const std::size_t m = g.rows();
  const std::size_t n = g.cols();
  XnSet out;
  out.box_size = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (out.box_size > UINT64_MAX / (n_bound + 1)) throw PreconditionError("enumerate_xn: box too large");
    out.box_size *= n_bound + 1;
  }
  // powers[i][a] = x_i^a componentwise
  std::vector<std::vector<RatVector>> powers(m);
  for (std::size_t i = 0; i < m; ++i) {
    powers[i].push_back(RatVector(n, Rational(1)));
    for (std::uint64_t a = 1; a <= n_bound; ++a) {
      RatVector next = powers[i].back();
      for (std::size_t j = 0; j < n; ++j) next[j] *= g.values()(i, j);
      powers[i].push_back(std::move(next));
    }
  }
  std::set<RatVector> seen;
  std::vector<std::uint64_t> a(m, 0);
  for (;;) {
    RatVector point(n, Rational(1));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) point[j] *= powers[i][a[i]][j];
    if (seen.insert(point).second) out.points.push_back(std::move(point));
    std::size_t pos = m;
    while (pos > 0 && a[pos - 1] == n_bound) a[--pos] = 0;
    if (pos == 0) break;
    ++a[pos - 1];
  }
  return out;
}

std::optional<MultiPoly> vanishing_poly(const std::vector<RatVector>& points, std::uint32_t degree_bound) {
  if (points.empty()) throw PreconditionError("vanishing_poly: need at least one point");
  if (degree_bound == 0) return std::nullopt;
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n) throw PreconditionError("vanishing_poly: points differ in dimension");
  const auto monomials = monomials_below_degree(n, degree_bound);
  RationalMatrix eval(points.size(), monomials.size());
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      Rational v = 1;
      for (std::size_t k = 0; k < n; ++k) v *= pow(points[r][k], static_cast<std::int64_t>(monomials[c][k]));
      eval(r, c) = v;
    }
  const RankKernel rk = rank_kernel_Q(eval);
  if (rk.kernel.empty()) return std::nullopt;
  MultiPoly p(n);
  for (std::size_t c = 0; c < monomials.size(); ++c)
    if (rk.kernel.front()[c] != 0) p.add_term(monomials[c], Rational(rk.kernel.front()[c]));
  return p;
}

Rational pairing(const GeneratorMatrix& g, std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != g.rows() || b.size() != g.cols()) throw PreconditionError("pairing: dimension mismatch");
  Rational out = 1;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out *= pow(g.values()(i, j), Integer(a[i] * b[j]));
  return out;
}

PairingReport subgroup_pairing_trivial(const GeneratorMatrix& g, const IntegerMatrix& a_basis,
                                       const IntegerMatrix& b_basis) {
  if (a_basis.rows() != g.rows() || b_basis.rows() != g.cols())
    throw PreconditionError("subgroup_pairing_trivial: basis dimension mismatch");
  PairingReport rep;
  rep.rank_a = rank_Q(to_rational(a_basis));
  rep.rank_b = rank_Q(to_rational(b_basis));
  if (rep.rank_a != a_basis.cols() || rep.rank_b != b_basis.cols())
    throw PreconditionError("subgroup_pairing_trivial: basis columns must be independent");
  rep.trivial = true;
  for (std::size_t s = 0; s < a_basis.cols() && rep.trivial; ++s)
    for (std::size_t u = 0; u < b_basis.cols() && rep.trivial; ++u)
      if (pairing(g, a_basis.col(s), b_basis.col(u)) != 1) rep.trivial = false;
  rep.dimension_sum =
      make_rational(static_cast<unsigned long>(rep.rank_a), static_cast<unsigned long>(g.rows())) +
      make_rational(static_cast<unsigned long>(rep.rank_b), static_cast<unsigned long>(g.cols()));
  rep.meets_threshold = rep.dimension_sum > 1;
  return rep;
}

Integer theta(std::uint64_t r, std::uint64_t d) {
  if (r == 0) throw PreconditionError("theta: r must be positive");
  Integer total = 0;
  Integer remaining = d;
  for (std::uint64_t k = 0; remaining > 0; ++k) {
    Integer shell;
    mpz_bin_uiui(shell.get_mpz_t(), k + r - 1, r - 1);
    const Integer take = shell < remaining ? shell : remaining;
    total += take * k;
    remaining -= take;
  }
  return total;
}

long double theta_asymptotic_bound(std::uint64_t r, std::uint64_t d) {
  if (r == 0) throw PreconditionError("theta_asymptotic_bound: r must be positive");
  const long double rr = static_cast<long double>(r);
  return rr / (6.0L * std::numbers::e_v<long double>) *
         std::pow(static_cast<long double>(d), (rr + 1.0L) / rr);
}

}  // namespace transcert
