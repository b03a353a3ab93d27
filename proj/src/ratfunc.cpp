#include "franel/ratfunc.hpp"

#include "franel/errors.hpp"

namespace franel {

namespace {

bool is_one(const BiPoly& p) { return p.is_constant() && !p.is_zero() && p.lead_coeff() == 1; }

}  // namespace

RatFunc::RatFunc(BiPoly num) : num_(std::move(num)), den_(1L) {}

RatFunc::RatFunc(BiPoly num, BiPoly den) {
  if (den.is_zero()) throw InvalidInput("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = BiPoly(1L);
    return;
  }
  const BiPoly g = gcd(num, den);
  if (!is_one(g)) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  *this = make_sign_canonical(std::move(num), std::move(den));
}

RatFunc RatFunc::make_sign_canonical(BiPoly num, BiPoly den) {
  if (num.is_zero()) return RatFunc(BiPoly(), BiPoly(1L), Normalized{});
  if (den.lead_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc(std::move(num), std::move(den), Normalized{});
}

Rational RatFunc::operator()(const Rational& n, const Rational& k) const {
  const Rational d = den_(n, k);
  if (d == 0) throw PoleError("rational function evaluated at a pole");
  return num_(n, k) / d;
}

RatFunc RatFunc::shift(const Integer& dn, const Integer& dk) const {
  // Shifting preserves coprimality and the leading coefficient.
  return RatFunc(num_.shift(dn, dk), den_.shift(dn, dk), Normalized{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  const BiPoly g = gcd(a.den_, b.den_);
  if (is_one(g)) {
    return RatFunc::make_sign_canonical(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  const BiPoly ad = divexact(a.den_, g);
  const BiPoly bd = divexact(b.den_, g);
  BiPoly t = a.num_ * bd + b.num_ * ad;
  if (t.is_zero()) return RatFunc();
  // Any common factor of t and ad*bd*g lies in g.
  const BiPoly g2 = gcd(t, g);
  if (!is_one(g2)) {
    t = divexact(t, g2);
    return RatFunc::make_sign_canonical(std::move(t), ad * divexact(b.den_, g2));
  }
  return RatFunc::make_sign_canonical(std::move(t), ad * b.den_);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Normalized{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  BiPoly an = a.num_;
  BiPoly bd = b.den_;
  BiPoly bn = b.num_;
  BiPoly ad = a.den_;
  if (!is_one(bd)) {
    const BiPoly g1 = gcd(an, bd);
    if (!is_one(g1)) {
      an = divexact(an, g1);
      bd = divexact(bd, g1);
    }
  }
  if (!is_one(ad)) {
    const BiPoly g2 = gcd(bn, ad);
    if (!is_one(g2)) {
      bn = divexact(bn, g2);
      ad = divexact(ad, g2);
    }
  }
  return RatFunc::make_sign_canonical(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw InvalidInput("rational function division by zero");
  return a * RatFunc::make_sign_canonical(b.den_, b.num_);
}

RatFunc pow(const RatFunc& f, unsigned e) {
  if (e == 0) return RatFunc(1L);
  // Powers of coprime polynomials stay coprime.
  return RatFunc::make_sign_canonical(pow(f.num_, e), pow(f.den_, e));
}

std::string to_string(const RatFunc& f) {
  if (f.den().is_constant() && f.den().lead_coeff() == 1) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace franel
