#pragma once

#include <string>
#include <vector>

#include "franel/integer.hpp"

namespace franel {

/// Power series in t over Q, truncated after t^order. Arithmetic never reads
/// or produces coefficients beyond the truncation order; binary operations
/// require equal orders.
class TruncSeries {
 public:
  /// The zero series at the given order.
  explicit TruncSeries(int order);
  TruncSeries(std::vector<Rational> coeffs, int order);

  static TruncSeries constant(const Rational& c, int order);
  /// 1 + a*t.
  static TruncSeries linear(const Rational& a, int order);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  /// Multiplies in place by (1 + a t).
  TruncSeries& mul_linear(const Rational& a);
  /// Divides in place by (1 + a t).
  TruncSeries& div_linear(const Rational& a);

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
  int order_;
};

/// Multiplicative inverse; throws NonInvertible for a zero constant term.
TruncSeries series_inv(const TruncSeries& f);

/// f^s by binary powering, s >= 0.
TruncSeries series_pow(const TruncSeries& f, unsigned s);

/// sin(t)/t truncated at the given order.
TruncSeries sinc_series(int order);

std::string to_string(const TruncSeries& f);

}  // namespace franel
