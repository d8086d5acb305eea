#pragma once

#include <cstddef>
#include <vector>

#include "transcert/matrix.hpp"

namespace transcert {

/// c_0 + c_1 t + ... + c_{T-1} t^{T-1} + O(t^T).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Missing coefficients are zero; more than `order` coefficients is an error.
  TruncatedSeries(std::size_t order, RatVector coeffs);

  static TruncatedSeries constant(std::size_t order, const Rational& c);
  /// The series t.
  static TruncatedSeries variable(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const RatVector& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const { return is_zero_vector(coeffs_); }

  TruncatedSeries truncate(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Results carry the smaller of the two orders.
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

 private:
  RatVector coeffs_;
};

/// Requires c_0 = 0.
TruncatedSeries series_exp(const TruncatedSeries& y);
/// Requires c_0 = 1.
TruncatedSeries series_log(const TruncatedSeries& z);
/// Requires c_0 != 0.
TruncatedSeries series_inverse(const TruncatedSeries& z);
/// Negative exponents go through series_inverse.
TruncatedSeries series_pow(const TruncatedSeries& z, const Integer& e);

/// Integer relations sum m_i y_i = 0 mod t^order; columns of `basis` are the
/// canonical HNF basis. Valid only to the stated order.
struct SeriesRelations {
  IntegerMatrix basis;
  std::size_t order = 0;
};

/// All series need zero constant term and a common order.
SeriesRelations relation_detect(const std::vector<TruncatedSeries>& ys);

/// prod exp(y_i)^{m_i} == exp(sum m_i y_i) mod t^T, exactly.
bool product_exp_identity(const std::vector<TruncatedSeries>& ys, const IntVector& ms);

}  // namespace transcert
