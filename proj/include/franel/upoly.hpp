#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "franel/integer.hpp"

namespace franel {

/// Dense univariate polynomial with integer coefficients.
///
/// Used for the coefficients c_i(n) of recurrence operators and as the
/// coefficient ring Z[n] when a bivariate polynomial is viewed as a
/// polynomial in k. The coefficient vector never carries trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c);  // NOLINT(google-explicit-constructor)
  UPoly(Integer c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Integer> coeffs);
  UPoly(std::initializer_list<long> coeffs);

  static UPoly monomial(Integer c, int degree);
  static UPoly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](int i) const;
  const Integer& lead() const { return coeffs_.back(); }

  Integer operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;

  /// p(x + c).
  UPoly shift(const Integer& c) const;

  std::size_t max_bits() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Integer& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Integer& c) { return a *= c; }
  friend UPoly operator*(const Integer& c, UPoly a) { return a *= c; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

UPoly pow(const UPoly& p, unsigned e);

/// Exact quotient a / b. Throws InvalidInput if b does not divide a.
UPoly divexact(const UPoly& a, const UPoly& b);

/// Divides every coefficient by c, which must divide all of them.
UPoly divexact(const UPoly& a, const Integer& c);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
Integer content(const UPoly& p);

/// p / content(p), with positive leading coefficient.
UPoly primitive_part(const UPoly& p);

/// Greatest common divisor over Z[x], primitive part times content gcd,
/// with positive leading coefficient. gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Distinct nonnegative integer roots of p, ascending. p must be nonzero.
std::vector<Integer> nonnegative_integer_roots(const UPoly& p);

std::string to_string(const UPoly& p, char var = 'n');

}  // namespace franel
