#include "transcert/padic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "transcert/errors.hpp"

namespace transcert {

namespace {

void check_prime(unsigned long p) {
  if (p < 2 || mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) == 0)
    throw PreconditionError("p-adic: modulus " + std::to_string(p) + " is not prime");
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw DomainError("p-adic: element is not invertible");
  return r;
}

// Strips the p-part of a nonzero integer; returns the exponent removed.
std::int64_t remove_p(Integer& a, unsigned long p) {
  Integer out;
  const auto e = mpz_remove(out.get_mpz_t(), a.get_mpz_t(), Integer(p).get_mpz_t());
  a = out;
  return static_cast<std::int64_t>(e);
}

std::int64_t v_p(std::uint64_t n, unsigned long p) {
  std::int64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

// floor(log_p n) for n >= 1
std::int64_t floor_log(std::uint64_t n, unsigned long p) {
  std::int64_t e = 0;
  while (n >= p) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace

Integer prime_power(unsigned long p, std::int64_t e) {
  if (e <= 0) return 1;
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(e));
  return out;
}

std::int64_t valuation(const Rational& q, unsigned long p) {
  if (q == 0) throw PreconditionError("valuation: zero has infinite valuation");
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  return remove_p(num, p) - remove_p(den, p);
}

PadicNumber::PadicNumber(unsigned long p, bool zero, std::int64_t v, Integer unit, std::int64_t k)
    : p_(p), zero_(zero), v_(v), unit_(std::move(unit)), k_(k) {}

PadicNumber PadicNumber::zero(unsigned long p, std::int64_t absolute_precision) {
  check_prime(p);
  return PadicNumber(p, true, absolute_precision, Integer(0), absolute_precision);
}

PadicNumber PadicNumber::normalize(unsigned long p, Integer value, std::int64_t shift, std::int64_t k) {
  if (k - shift <= 0) return PadicNumber(p, true, k, Integer(0), k);
  value = mod(value, prime_power(p, k - shift));
  if (value == 0) return PadicNumber(p, true, k, Integer(0), k);
  const std::int64_t v = shift + remove_p(value, p);
  return PadicNumber(p, false, v, mod(value, prime_power(p, k - v)), k);
}

PadicNumber PadicNumber::from_rational(const Rational& q, unsigned long p, std::int64_t absolute_precision) {
  check_prime(p);
  if (q == 0) return zero(p, absolute_precision);
  const std::int64_t v = transcert::valuation(q, p);
  if (v >= absolute_precision) return zero(p, absolute_precision);
  Integer num = q.get_num();
  Integer den = q.get_den();
  remove_p(num, p);
  remove_p(den, p);
  const Integer modulus = prime_power(p, absolute_precision - v);
  return PadicNumber(p, false, v, mod(num * inverse_mod(den, modulus), modulus), absolute_precision);
}

PadicNumber PadicNumber::from_rational_relative(const Rational& q, unsigned long p, std::int64_t relative_precision) {
  if (q == 0) throw PreconditionError("from_rational_relative: zero has no relative precision");
  check_prime(p);
  return from_rational(q, p, transcert::valuation(q, p) + relative_precision);
}

Rational PadicNumber::to_rational() const {
  if (zero_) return 0;
  Rational out(unit_);
  if (v_ >= 0) return out * Rational(prime_power(p_, v_));
  return out / Rational(prime_power(p_, -v_));
}

std::vector<unsigned long> PadicNumber::digits() const {
  std::vector<unsigned long> out;
  if (zero_) return out;
  Integer u = unit_;
  for (std::int64_t i = 0; i < k_ - v_; ++i) {
    out.push_back(mpz_fdiv_ui(u.get_mpz_t(), p_));
    mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), p_);
  }
  return out;
}

std::string PadicNumber::to_string() const {
  std::ostringstream os;
  const auto ds = digits();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] == 0) continue;
    const std::int64_t e = v_ + static_cast<std::int64_t>(i);
    os << ds[i];
    if (e == 1)
      os << "*" << p_;
    else if (e != 0)
      os << "*" << p_ << "^" << e;
    os << " + ";
  }
  os << "O(" << p_ << "^" << k_ << ")";
  return os.str();
}

PadicNumber PadicNumber::truncate(std::int64_t k) const {
  if (k > k_) throw PrecisionError("truncate: requested precision exceeds the known precision");
  if (zero_ || k <= v_) return PadicNumber(p_, true, k, Integer(0), k);
  return PadicNumber(p_, false, v_, mod(unit_, prime_power(p_, k - v_)), k);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  if (a.p_ != b.p_) throw PreconditionError("p-adic: prime mismatch");
  const std::int64_t k = std::min(a.k_, b.k_);
  if (a.zero_) return b.truncate(k);
  if (b.zero_) return a.truncate(k);
  const std::int64_t vmin = std::min(a.v_, b.v_);
  const Integer value = a.unit_ * prime_power(a.p_, a.v_ - vmin) + b.unit_ * prime_power(a.p_, b.v_ - vmin);
  return PadicNumber::normalize(a.p_, value, vmin, k);
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  return PadicNumber(p_, false, v_, mod(-unit_, prime_power(p_, k_ - v_)), k_);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  if (a.p_ != b.p_) throw PreconditionError("p-adic: prime mismatch");
  if (a.zero_ && b.zero_) return PadicNumber(a.p_, true, a.k_ + b.k_, Integer(0), a.k_ + b.k_);
  if (a.zero_) return PadicNumber(a.p_, true, a.k_ + b.v_, Integer(0), a.k_ + b.v_);
  if (b.zero_) return PadicNumber(a.p_, true, b.k_ + a.v_, Integer(0), b.k_ + a.v_);
  const std::int64_t n = std::min(a.relative_precision(), b.relative_precision());
  const std::int64_t v = a.v_ + b.v_;
  return PadicNumber(a.p_, false, v, mod(a.unit_ * b.unit_, prime_power(a.p_, n)), v + n);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
  if (a.p_ != b.p_) throw PreconditionError("p-adic: prime mismatch");
  if (b.zero_) throw DomainError("p-adic: division by a value indistinguishable from 0");
  if (a.zero_) return PadicNumber(a.p_, true, a.k_ - b.v_, Integer(0), a.k_ - b.v_);
  const std::int64_t n = std::min(a.relative_precision(), b.relative_precision());
  const std::int64_t v = a.v_ - b.v_;
  const Integer modulus = prime_power(a.p_, n);
  return PadicNumber(a.p_, false, v, mod(a.unit_ * inverse_mod(b.unit_, modulus), modulus), v + n);
}

PadicNumber PadicNumber::pow(const Integer& e) const {
  if (e == 0) return from_rational(1, p_, zero_ ? std::max<std::int64_t>(k_, 1) : relative_precision());
  if (zero_) {
    if (e < 0) throw DomainError("p-adic: negative power of a value indistinguishable from 0");
    if (!e.fits_slong_p()) throw PreconditionError("p-adic: exponent too large");
    const std::int64_t k = k_ * e.get_si();
    return PadicNumber(p_, true, k, Integer(0), k);
  }
  const Integer ve = Integer(static_cast<long>(v_)) * e;
  if (!ve.fits_slong_p()) throw PreconditionError("p-adic: valuation overflow");
  const std::int64_t n = relative_precision();
  const Integer modulus = prime_power(p_, n);
  Integer u;
  mpz_powm(u.get_mpz_t(), unit_.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
  return PadicNumber(p_, false, ve.get_si(), u, ve.get_si() + n);
}

PadicNumber padic_arith(const PadicNumber& a, const PadicNumber& b, PadicOp op) {
  if (a.prime() != b.prime()) throw PreconditionError("p-adic: prime mismatch");
  switch (op) {
    case PadicOp::add: return a + b;
    case PadicOp::sub: return a - b;
    case PadicOp::mul: return a * b;
    case PadicOp::div: return a / b;
  }
  throw PreconditionError("p-adic: unknown operation");
}

namespace {

// log(1 + z) mod p^n for an integer z with v(z) >= 1 (>= 2 when p = 2).
Integer log_one_unit(const Integer& z, unsigned long p, std::int64_t n) {
  Integer zz = z;
  const std::int64_t s = remove_p(zz, p);
  std::uint64_t terms = 1;
  while (static_cast<std::int64_t>(terms) * s - floor_log(terms, p) < n) ++terms;
  const std::int64_t guard = floor_log(terms, p);
  const Integer big = prime_power(p, n + guard);
  const Integer modulus = prime_power(p, n);
  Integer sum = 0;
  Integer zpow = 1;
  for (std::uint64_t k = 1; k < terms; ++k) {
    zpow = mod(zpow * z, big);
    const std::int64_t e = v_p(k, p);
    Integer t = zpow / prime_power(p, e);
    std::uint64_t unit_k = k;
    for (std::int64_t i = 0; i < e; ++i) unit_k /= p;
    t = mod(t * inverse_mod(Integer(static_cast<unsigned long>(unit_k)), modulus), modulus);
    if (k % 2 == 1)
      sum += t;
    else
      sum -= t;
  }
  return mod(sum, modulus);
}

}  // namespace

PadicNumber log_p(const PadicNumber& x) {
  if (x.is_zero()) throw DomainError("log_p: argument is zero");
  const unsigned long p = x.prime();
  const std::int64_t n = x.relative_precision();
  const Integer modulus = prime_power(p, n);
  Integer w = x.unit();
  bool divide = false;
  if (p == 2) {
    if (n >= 2 && mpz_fdiv_ui(w.get_mpz_t(), 4) == 3) w = mod(-w, modulus);
  } else if (mpz_fdiv_ui(w.get_mpz_t(), p) != 1) {
    mpz_powm_ui(w.get_mpz_t(), w.get_mpz_t(), p - 1, modulus.get_mpz_t());
    divide = true;
  }
  const Integer z = mod(w - 1, modulus);
  if (z == 0) return PadicNumber::zero(p, n);
  Integer result = log_one_unit(z, p, n);
  if (divide) result = mod(result * inverse_mod(Integer(p - 1), modulus), modulus);
  return PadicNumber::from_rational(Rational(result), p, n);
}

PadicNumber exp_p(const PadicNumber& x) {
  const unsigned long p = x.prime();
  const std::int64_t domain = p == 2 ? 2 : 1;
  if (x.is_zero()) {
    if (x.absolute_precision() < domain) throw DomainError("exp_p: argument not known to lie in the convergence domain");
    return PadicNumber::from_rational(1, p, x.absolute_precision());
  }
  if (x.valuation() < domain) throw DomainError("exp_p: argument outside the convergence domain");
  const std::int64_t k = x.absolute_precision();
  const std::int64_t v = x.valuation();
  const Integer xv = x.unit() * prime_power(p, v);
  std::uint64_t terms = 1;
  while ((static_cast<std::int64_t>(terms) * v - k) * static_cast<std::int64_t>(p - 1) <
         static_cast<std::int64_t>(terms) - 1)
    ++terms;
  std::int64_t guard = 0;
  for (std::uint64_t i = 1; i < terms; ++i) guard += v_p(i, p);
  const Integer big = prime_power(p, k + guard);
  const Integer modulus = prime_power(p, k);
  Integer sum = 1;
  Integer xpow = 1;
  Integer fact_unit = 1;
  std::int64_t fact_e = 0;
  for (std::uint64_t i = 1; i < terms; ++i) {
    xpow = mod(xpow * xv, big);
    std::uint64_t unit_i = i;
    while (unit_i % p == 0) {
      unit_i /= p;
      ++fact_e;
    }
    fact_unit = mod(fact_unit * static_cast<unsigned long>(unit_i), modulus);
    Integer t = xpow / prime_power(p, fact_e);
    sum += mod(t * inverse_mod(fact_unit, modulus), modulus);
  }
  return PadicNumber::from_rational(Rational(mod(sum, modulus)), p, k);
}

PadicNumber teichmuller(const Integer& a, unsigned long p, std::int64_t k) {
  check_prime(p);
  if (mpz_fdiv_ui(a.get_mpz_t(), p) == 0) throw DomainError("teichmuller: residue must be nonzero mod p");
  const Integer modulus = prime_power(p, k);
  Integer x = mod(a, modulus);
  for (std::int64_t i = 0; i < k; ++i) mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), p, modulus.get_mpz_t());
  return PadicNumber::from_rational(Rational(x), p, k);
}

namespace {

Integer eval_poly(const IntVector& f, const Integer& x) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntVector derivative(const IntVector& f) {
  IntVector d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

}  // namespace

PadicNumber hensel_root(const IntVector& f, const Integer& r0, unsigned long p, std::int64_t k) {
  check_prime(p);
  if (k < 1) throw PreconditionError("hensel_root: precision must be positive");
  const IntVector df = derivative(f);
  const Integer pp = p;
  if (mod(eval_poly(f, r0), pp) != 0) throw PreconditionError("hensel_root: f(r0) is not 0 mod p");
  if (mod(eval_poly(df, r0), pp) == 0) throw PreconditionError("hensel_root: f'(r0) is 0 mod p");
  Integer r = mod(r0, pp);
  std::int64_t prec = 1;
  while (prec < k) {
    prec = std::min<std::int64_t>(2 * prec, k);
    const Integer modulus = prime_power(p, prec);
    r = mod(r - eval_poly(f, r) * inverse_mod(eval_poly(df, r), modulus), modulus);
  }
  if (mod(eval_poly(f, r), prime_power(p, k)) != 0) throw SolverFailure("hensel_root: lifted root failed verification");
  return PadicNumber::from_rational(Rational(r), p, k);
}

PadicRank padic_rank(const PadicMatrix& m) {
  PadicMatrix a = m;
  PadicRank out;
  std::vector<bool> row_used(a.rows(), false), col_used(a.cols(), false);
  for (;;) {
    std::size_t pr = a.rows(), pc = a.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (col_used[j] || a(i, j).is_zero()) continue;
        if (pr == a.rows() || a(i, j).valuation() < a(pr, pc).valuation()) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == a.rows()) break;
    row_used[pr] = true;
    col_used[pc] = true;
    out.pivot_rows.push_back(pr);
    out.pivot_cols.push_back(pc);
    out.pivot_valuations.push_back(a(pr, pc).valuation());
    const PadicNumber pivot = a(pr, pc);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (row_used[i] || a(i, pc).is_zero()) continue;
      const PadicNumber f = a(i, pc) / pivot;
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!col_used[j]) a(i, j) = a(i, j) - f * a(pr, j);
    }
  }
  out.certified_rank = out.pivot_rows.size();
  return out;
}

LogMatrix log_matrix(const std::vector<UnitDescription>& units, unsigned long p, std::int64_t k) {
  check_prime(p);
  if (k < 1) throw PreconditionError("log_matrix: precision must be positive");
  std::size_t cols = 1;
  bool seen_algebraic = false;
  for (const auto& u : units)
    if (const auto* alg = std::get_if<AlgebraicUnit>(&u)) {
      if (alg->residues.empty()) throw PreconditionError("log_matrix: algebraic unit needs at least one residue");
      if (seen_algebraic && alg->residues.size() != cols)
        throw PreconditionError("log_matrix: algebraic units must share the embedding count");
      cols = alg->residues.size();
      seen_algebraic = true;
    }
  LogMatrix out;
  out.precision = k;
  out.matrix = PadicMatrix(units.size(), cols, PadicNumber::zero(p, k));
  for (std::size_t i = 0; i < units.size(); ++i) {
    std::vector<PadicNumber> values;
    if (const auto* q = std::get_if<Rational>(&units[i])) {
      if (*q == 0 || valuation(*q, p) != 0) throw DomainError("log_matrix: " + transcert::to_string(*q) + " is not a p-adic unit");
      values.assign(cols, PadicNumber::from_rational(*q, p, k));
    } else {
      const auto& alg = std::get<AlgebraicUnit>(units[i]);
      for (const auto& r : alg.residues) {
        if (mpz_fdiv_ui(r.get_mpz_t(), p) == 0) throw DomainError("log_matrix: embedding residue is not a unit");
        values.push_back(hensel_root(alg.minpoly, r, p, k));
      }
    }
    for (std::size_t j = 0; j < cols; ++j) out.matrix(i, j) = log_p(values[j]);
  }
  out.rank = padic_rank(out.matrix);
  return out;
}

InterpDetReport interp_det_valuation_at(const Rational& u, unsigned long p, const IntVector& a, const IntVector& y,
                                        std::int64_t working_precision) {
  check_prime(p);
  const std::size_t d = a.size();
  if (d == 0 || y.size() != d) throw PreconditionError("interp_det: a and y must be nonempty and of equal length");
  if (std::set<Integer>(a.begin(), a.end()).size() != d || std::set<Integer>(y.begin(), y.end()).size() != d)
    throw PreconditionError("interp_det: exponents must be distinct");
  if (u == 1) throw PreconditionError("interp_det: u must differ from 1");
  InterpDetReport rep;
  rep.u_valuation = valuation(u - 1, p);
  if (rep.u_valuation < 1) throw PreconditionError("interp_det: requires v_p(u - 1) >= 1");
  rep.theta = Integer(static_cast<unsigned long>(d * (d - 1) / 2));
  rep.bound = rep.theta * static_cast<long>(rep.u_valuation);
  rep.working_precision = working_precision;
  const PadicNumber base = PadicNumber::from_rational(u, p, working_precision);
  PadicMatrix m(d, d, PadicNumber::zero(p, working_precision));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = base.pow(a[i] * y[j]);
  const PadicRank pr = padic_rank(m);
  if (pr.certified_rank < d) throw PrecisionError("interp_det: working precision exhausted");
  std::int64_t val = 0;
  for (const auto v : pr.pivot_valuations) val += v;
  rep.valuation = val;
  rep.holds = Integer(static_cast<long>(val)) >= rep.bound;
  return rep;
}

InterpDetReport interp_det_valuation(const Rational& u, unsigned long p, const IntVector& a, const IntVector& y,
                                     std::int64_t max_precision) {
  for (std::int64_t k = 32;; k *= 2) {
    try {
      return interp_det_valuation_at(u, p, a, y, std::min(k, max_precision));
    } catch (const PrecisionError&) {
      if (k >= max_precision) throw;
    }
  }
}

}  // namespace transcert
