#include "transcert/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "transcert/errors.hpp"

namespace transcert {

std::uint64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(std::size_t variable_count, const Rational& c) {
  MultiPoly p(variable_count);
  p.add_term(Exponents(variable_count, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t variable_count, std::size_t index) {
  if (index >= variable_count) throw PreconditionError("variable index out of range");
  Exponents e(variable_count, 0);
  e[index] = 1;
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const Rational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<std::int64_t>(transcert::total_degree(terms_.begin()->first));
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

const MultiPoly::TermMap::value_type& MultiPoly::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return *terms_.begin();
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw PreconditionError("monomial length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw PreconditionError("polynomial variable counts differ");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw PreconditionError("evaluation point length differs from variable count");
  // Cache powers per variable; degrees are small in practice.
  std::vector<std::vector<Rational>> powers(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    const auto d = degree_in(v);
    powers[v].resize(d + 1);
    powers[v][0] = 1;
    for (std::uint32_t k = 1; k <= d; ++k) powers[v][k] = powers[v][k - 1] * point[v];
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] != 0) term *= powers[v][e[v]];
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
  if (var >= nvars_) throw PreconditionError("variable index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c * transcert::pow(value, static_cast<std::int64_t>(e[var])));
  }
  return out;
}

MultiPoly MultiPoly::homogenize() const { return homogenize_to(std::max<std::int64_t>(total_degree(), 0)); }

MultiPoly MultiPoly::homogenize_to(std::int64_t degree) const {
  if (degree < total_degree()) throw PreconditionError("homogenization degree below polynomial degree");
  MultiPoly out(nvars_ + 1);
  for (const auto& [e, c] : terms_) {
    Exponents f(nvars_ + 1);
    f[0] = static_cast<std::uint32_t>(degree - static_cast<std::int64_t>(transcert::total_degree(e)));
    std::copy(e.begin(), e.end(), f.begin() + 1);
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::extend_variables(std::size_t variable_count) const {
  if (variable_count < nvars_) throw PreconditionError("cannot drop variables");
  MultiPoly out(variable_count);
  for (const auto& [e, c] : terms_) {
    Exponents f(variable_count, 0);
    std::copy(e.begin(), e.end(), f.begin());
    out.add_term(f, c);
  }
  return out;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  return op == PolyOp::add ? a + b : a * b;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.variable_count() != b.variable_count()) throw PreconditionError("polynomial variable counts differ");
  if (b.is_constant()) return a * (Rational(1) / b.constant_term());
  const std::size_t n = a.variable_count();
  MultiPoly rem = a;
  MultiPoly quot(n);
  const auto& [lead_e, lead_c] = b.leading_term();
  Exponents q(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    for (std::size_t i = 0; i < n; ++i) {
      if (re[i] < lead_e[i]) throw PreconditionError("polynomial division is not exact");
      q[i] = re[i] - lead_e[i];
    }
    MultiPoly t = MultiPoly::monomial(q, rc / lead_c);
    rem -= t * b;
    quot += t;
  }
  return quot;
}

std::vector<Exponents> monomials_below_degree(std::size_t variable_count, std::uint32_t bound) {
  std::vector<Exponents> out;
  Exponents e(variable_count, 0);
  // Enumerate per total degree so the result is already grouped by degree.
  for (std::uint32_t deg = 0; deg < bound; ++deg) {
    std::vector<Exponents> shell;
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
      if (variable_count == 0) {
        if (left == 0) shell.push_back(e);
        return;
      }
      if (i + 1 == variable_count) {
        e[i] = left;
        shell.push_back(e);
        return;
      }
      for (std::uint32_t k = 0; k <= left; ++k) {
        e[i] = k;
        self(self, i + 1, left - k);
      }
    };
    rec(rec, 0, deg);
    std::sort(shell.begin(), shell.end());
    out.insert(out.end(), shell.begin(), shell.end());
    if (variable_count == 0) break;
  }
  return out;
}

}  // namespace transcert
