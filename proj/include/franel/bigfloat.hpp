#pragma once

#include <mpfr.h>

#include <string>

#include "franel/integer.hpp"

namespace franel {

/// An MPFR value x~ together with a bound e >= |x - x~| on the distance to
/// the exact quantity it stands for. Every operation rounds the value to
/// nearest and adds its own rounding error to the propagated bound; bounds
/// are always rounded upward.
class BigFloat {
 public:
  /// Exact zero. Throws InvalidInput when bits < 2.
  explicit BigFloat(long precision_bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_integer(const Integer& z, long precision_bits);
  static BigFloat from_rational(const Rational& q, long precision_bits);
  /// A value known only up to an additional absolute error.
  static BigFloat with_error(const BigFloat& x, const BigFloat& extra_error);

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// The rounded value, with no error attached.
  BigFloat midpoint() const;
  /// The error bound as an exact BigFloat.
  BigFloat error_bound() const;
  double to_double() const;
  double error_double() const;
  bool is_exact() const { return mpfr_zero_p(error_) != 0; }

  /// The value with `digits` significant decimal digits.
  std::string to_string(int digits) const;

  /// True when [x - e, x + e] and [y - f, y + f] are disjoint.
  friend bool certainly_distinct(const BigFloat& x, const BigFloat& y);
  /// |x| + e, an upper bound on the absolute value of the exact quantity.
  friend double magnitude_upper(const BigFloat& x);
  /// Upper bound on |exact(x)| as a BigFloat at x's precision.
  friend BigFloat abs_upper(const BigFloat& x);
  /// Upper bound on |exact(x) - exact(y)|, given the enclosures.
  friend BigFloat distance_upper(const BigFloat& x, const BigFloat& y);

  friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator-(const BigFloat& x);
  friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
  /// Throws InvalidInput when the divisor's enclosure contains zero.
  friend BigFloat operator/(const BigFloat& x, const BigFloat& y);
  /// Throws InvalidInput when the enclosure reaches below zero.
  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat pow(const BigFloat& x, unsigned e);
  friend BigFloat abs(const BigFloat& x);
  /// x * 2^e, exact apart from the value's own error.
  friend BigFloat ldexp(const BigFloat& x, long e);

  friend bool operator<(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.value_, y.value_) != 0; }
  friend bool operator>(const BigFloat& x, const BigFloat& y) { return y < x; }
  friend bool operator<=(const BigFloat& x, const BigFloat& y) { return !(y < x); }

  const __mpfr_struct* value() const { return value_; }
  const __mpfr_struct* error() const { return error_; }

 private:
  mpfr_t value_;
  mpfr_t error_;

  // Adds the rounding error of an operation that returned `ternary`.
  void add_rounding(int ternary);
};

/// pi by Machin's formula in fixed point, with the truncation bound carried
/// in the error.
BigFloat pi(long precision_bits);

}  // namespace franel
