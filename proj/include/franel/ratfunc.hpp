#pragma once

#include <string>

#include "franel/bipoly.hpp"

namespace franel {

/// Rational function num/den in Q(n, k), always kept in lowest terms with
/// integer coefficients and a denominator whose leading coefficient (under
/// GrlexLess) is positive. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1L) {}
  RatFunc(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFunc(BiPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(BiPoly num, BiPoly den);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws PoleError when the denominator vanishes at (n, k).
  Rational operator()(const Rational& n, const Rational& k) const;

  /// f(n + dn, k + dk).
  RatFunc shift(const Integer& dn, const Integer& dk) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc pow(const RatFunc& f, unsigned e);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Normalized {};
  RatFunc(BiPoly num, BiPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc make_sign_canonical(BiPoly num, BiPoly den);

  BiPoly num_;
  BiPoly den_;
};

std::string to_string(const RatFunc& f);

}  // namespace franel
