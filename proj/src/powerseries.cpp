#include "transcert/powerseries.hpp"

#include <algorithm>

#include "transcert/errors.hpp"
#include "transcert/lattice.hpp"

namespace transcert {

TruncatedSeries::TruncatedSeries(std::size_t order, RatVector coeffs) : coeffs_(std::move(coeffs)) {
  if (order == 0) throw PreconditionError("series: order must be positive");
  if (coeffs_.size() > order) throw PreconditionError("series: more coefficients than the order allows");
  coeffs_.resize(order, Rational(0));
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Rational& c) { return TruncatedSeries(order, {c}); }

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  if (order < 2) return TruncatedSeries(order, {});
  return TruncatedSeries(order, {Rational(0), Rational(1)});
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
  if (order > this->order()) throw PreconditionError("series: cannot raise the truncation order");
  return TruncatedSeries(order, RatVector(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t t = std::min(a.order(), b.order());
  RatVector c(t);
  for (std::size_t i = 0; i < t; ++i) c[i] = a[i] + b[i];
  return TruncatedSeries(t, std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + Rational(-1) * b; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t t = std::min(a.order(), b.order());
  RatVector c(t, Rational(0));
  for (std::size_t i = 0; i < t; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < t; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(t, std::move(c));
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
  RatVector c = a.coeffs();
  for (auto& x : c) x *= s;
  return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries series_exp(const TruncatedSeries& y) {
  if (y[0] != 0) throw PreconditionError("series_exp: constant term must be 0");
  const std::size_t t = y.order();
  RatVector z(t, Rational(0));
  z[0] = 1;
  // n z_n = sum_k k y_k z_{n-k}
  for (std::size_t n = 1; n < t; ++n) {
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += Rational(static_cast<long>(k)) * y[k] * z[n - k];
    z[n] = s / Rational(static_cast<long>(n));
  }
  return TruncatedSeries(t, std::move(z));
}

TruncatedSeries series_log(const TruncatedSeries& z) {
  if (z[0] != 1) throw PreconditionError("series_log: constant term must be 1");
  const std::size_t t = z.order();
  RatVector y(t, Rational(0));
  // n y_n = n z_n - sum_{k<n} k y_k z_{n-k}
  for (std::size_t n = 1; n < t; ++n) {
    Rational s = Rational(static_cast<long>(n)) * z[n];
    for (std::size_t k = 1; k < n; ++k) s -= Rational(static_cast<long>(k)) * y[k] * z[n - k];
    y[n] = s / Rational(static_cast<long>(n));
  }
  return TruncatedSeries(t, std::move(y));
}

TruncatedSeries series_inverse(const TruncatedSeries& z) {
  if (z[0] == 0) throw PreconditionError("series_inverse: constant term must be nonzero");
  const std::size_t t = z.order();
  RatVector w(t, Rational(0));
  w[0] = 1 / z[0];
  for (std::size_t n = 1; n < t; ++n) {
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += z[k] * w[n - k];
    w[n] = -s * w[0];
  }
  return TruncatedSeries(t, std::move(w));
}

TruncatedSeries series_pow(const TruncatedSeries& z, const Integer& e) {
  TruncatedSeries base = e < 0 ? series_inverse(z) : z;
  Integer k = abs(e);
  TruncatedSeries out = TruncatedSeries::constant(z.order(), 1);
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

SeriesRelations relation_detect(const std::vector<TruncatedSeries>& ys) {
  SeriesRelations out;
  if (ys.empty()) return out;
  out.order = ys.front().order();
  for (const auto& y : ys) {
    if (y.order() != out.order) throw PreconditionError("relation_detect: series must share one order");
    if (y[0] != 0) throw PreconditionError("relation_detect: constant terms must be 0");
  }
  const std::size_t n = ys.size();
  IntegerMatrix a(out.order - 1, n);
  for (std::size_t r = 1; r < out.order; ++r) {
    Integer l = 1;
    for (std::size_t i = 0; i < n; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ys[i][r].get_den_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      const Rational scaled = ys[i][r] * Rational(l);
      a(r - 1, i) = scaled.get_num();
    }
  }
  out.basis = integer_kernel(a);
  return out;
}

bool product_exp_identity(const std::vector<TruncatedSeries>& ys, const IntVector& ms) {
  if (ys.size() != ms.size()) throw PreconditionError("product_exp_identity: length mismatch");
  if (ys.empty()) return true;
  const std::size_t t = ys.front().order();
  TruncatedSeries lhs = TruncatedSeries::constant(t, 1);
  TruncatedSeries sum(t, {});
  for (std::size_t i = 0; i < ys.size(); ++i) {
    lhs = lhs * series_pow(series_exp(ys[i]), ms[i]);
    sum = sum + Rational(ms[i]) * ys[i];
  }
  const TruncatedSeries rhs = series_exp(sum);
  if (lhs != rhs) return false;
  if (sum.is_zero() && lhs != TruncatedSeries::constant(lhs.order(), 1)) return false;
  return true;
}

}  // namespace transcert
