#pragma once

#include <map>
#include <string>
#include <vector>

#include "franel/integer.hpp"
#include "franel/upoly.hpp"

namespace franel {

/// Exponent pair of a monomial n^deg_n k^deg_k.
struct Monomial {
  int deg_n = 0;
  int deg_k = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with n > k: total degree first, then deg_n.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int ta = a.deg_n + a.deg_k;
    const int tb = b.deg_n + b.deg_k;
    if (ta != tb) return ta < tb;
    return a.deg_n < b.deg_n;
  }
};

/// Sparse polynomial in Z[n, k]. Zero coefficients are never stored.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Integer, GrlexLess>;

  BiPoly() = default;
  BiPoly(long c);  // NOLINT(google-explicit-constructor)
  BiPoly(Integer c);  // NOLINT(google-explicit-constructor)

  static BiPoly n();
  static BiPoly k();
  static BiPoly monomial(Integer c, int deg_n, int deg_k);
  /// Embeds a polynomial in n (resp. k).
  static BiPoly from_n(const UPoly& p);
  static BiPoly from_k(const UPoly& p);
  /// Inverse of k_coeffs().
  static BiPoly from_k_coeffs(const std::vector<UPoly>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  int deg_n() const;
  int deg_k() const;
  /// Leading term under GrlexLess; the polynomial must be nonzero.
  const Monomial& lead_monomial() const { return terms_.rbegin()->first; }
  const Integer& lead_coeff() const { return terms_.rbegin()->second; }
  Integer coeff(int deg_n, int deg_k) const;

  /// Coefficients of k^0, k^1, ... as polynomials in n.
  std::vector<UPoly> k_coeffs() const;
  /// Coefficient of k^j as a polynomial in n.
  UPoly k_coeff(int j) const;

  Rational operator()(const Rational& n, const Rational& k) const;
  /// p(n0, k) as a polynomial in k.
  UPoly at_n(const Integer& n0) const;

  /// p(n + dn, k + dk).
  BiPoly shift(const Integer& dn, const Integer& dk) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Integer& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Integer& c) { return a *= c; }
  friend BiPoly operator*(const Integer& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

BiPoly pow(const BiPoly& p, unsigned e);

/// Exact quotient; throws InvalidInput when b does not divide a.
BiPoly divexact(const BiPoly& a, const BiPoly& b);
BiPoly divexact(const BiPoly& a, const Integer& c);

/// Nonnegative gcd of all integer coefficients.
Integer integer_content(const BiPoly& p);

/// Content with respect to k: gcd in Z[n] of the k-coefficients, positive lead.
UPoly k_content(const BiPoly& p);

/// Greatest common divisor in Z[n, k], normalized to a positive leading
/// coefficient under GrlexLess. Throws InvalidInput when both are zero.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

std::string to_string(const BiPoly& p);

}  // namespace franel
