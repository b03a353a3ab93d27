#include "franel/bigfloat.hpp"

#include <algorithm>
#include <cmath>

#include "franel/errors.hpp"

namespace franel {

namespace {

constexpr mpfr_prec_t kErrorBits = 64;

// Scratch value for bound arithmetic, released on scope exit.
struct Tmp {
  mpfr_t v;
  explicit Tmp(mpfr_prec_t bits = kErrorBits) { mpfr_init2(v, bits); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  operator mpfr_ptr() { return v; }  // NOLINT(google-explicit-constructor)
};

long joint_precision(const BigFloat& x, const BigFloat& y) { return std::max(x.precision(), y.precision()); }

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  if (precision_bits < 2 || precision_bits > MPFR_PREC_MAX) throw InvalidInput("precision out of range");
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_init2(error_, kErrorBits);
  mpfr_set_zero(value_, 1);
  mpfr_set_zero(error_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_init2(error_, kErrorBits);
  mpfr_set(value_, o.value_, MPFR_RNDN);
  mpfr_set(error_, o.error_, MPFR_RNDU);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : BigFloat(2) { *this = std::move(o); }

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this == &o) return *this;
  mpfr_set_prec(value_, mpfr_get_prec(o.value_));
  mpfr_set(value_, o.value_, MPFR_RNDN);
  mpfr_set(error_, o.error_, MPFR_RNDU);
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(value_, o.value_);
  mpfr_swap(error_, o.error_);
  return *this;
}

BigFloat::~BigFloat() {
  mpfr_clear(value_);
  mpfr_clear(error_);
}

void BigFloat::add_rounding(int ternary) {
  if (ternary == 0) return;
  // Round-to-nearest is off by at most half an ulp <= 2^-p |result|.
  Tmp t;
  mpfr_abs(t, value_, MPFR_RNDU);
  mpfr_div_2si(t, t, static_cast<long>(mpfr_get_prec(value_)), MPFR_RNDU);
  mpfr_add(error_, error_, t, MPFR_RNDU);
}

BigFloat BigFloat::from_integer(const Integer& z, long precision_bits) {
  BigFloat r(precision_bits);
  r.add_rounding(mpfr_set_z(r.value_, z.get_mpz_t(), MPFR_RNDN));
  return r;
}

BigFloat BigFloat::from_rational(const Rational& q, long precision_bits) {
  BigFloat r(precision_bits);
  r.add_rounding(mpfr_set_q(r.value_, q.get_mpq_t(), MPFR_RNDN));
  return r;
}

BigFloat BigFloat::with_error(const BigFloat& x, const BigFloat& extra_error) {
  BigFloat r = x;
  Tmp t;
  mpfr_abs(t, extra_error.value_, MPFR_RNDU);
  mpfr_add(t, t, extra_error.error_, MPFR_RNDU);
  mpfr_add(r.error_, r.error_, t, MPFR_RNDU);
  return r;
}

BigFloat BigFloat::midpoint() const {
  BigFloat r = *this;
  mpfr_set_zero(r.error_, 1);
  return r;
}

BigFloat BigFloat::error_bound() const {
  BigFloat r(kErrorBits);
  mpfr_set(r.value_, error_, MPFR_RNDN);
  return r;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

double BigFloat::error_double() const { return mpfr_get_d(error_, MPFR_RNDU); }

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", std::max(digits, 1), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

bool certainly_distinct(const BigFloat& x, const BigFloat& y) {
  // |x~ - y~| computed downward must exceed e + f computed upward.
  Tmp gap(std::max(x.precision(), y.precision()) + 2);
  mpfr_sub(gap, x.value_, y.value_, MPFR_RNDN);
  Tmp lo;
  mpfr_abs(lo, gap, MPFR_RNDD);
  // The subtraction may round; subtract one more ulp-sized slack.
  Tmp slack;
  mpfr_abs(slack, gap, MPFR_RNDU);
  mpfr_div_2si(slack, slack, static_cast<long>(mpfr_get_prec(gap.v)) - 1, MPFR_RNDU);
  mpfr_sub(lo, lo, slack, MPFR_RNDD);
  Tmp hi;
  mpfr_add(hi, x.error_, y.error_, MPFR_RNDU);
  return mpfr_greater_p(lo, hi) != 0;
}

double magnitude_upper(const BigFloat& x) {
  Tmp t;
  mpfr_abs(t, x.value_, MPFR_RNDU);
  mpfr_add(t, t, x.error_, MPFR_RNDU);
  return mpfr_get_d(t, MPFR_RNDU);
}

BigFloat abs_upper(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.value_, x.value_, MPFR_RNDU);
  mpfr_add(r.value_, r.value_, x.error_, MPFR_RNDU);
  return r;
}

BigFloat distance_upper(const BigFloat& x, const BigFloat& y) {
  BigFloat r(joint_precision(x, y));
  mpfr_sub(r.value_, x.value_, y.value_, MPFR_RNDN);
  mpfr_abs(r.value_, r.value_, MPFR_RNDU);
  Tmp e;
  mpfr_add(e, x.error_, y.error_, MPFR_RNDU);
  // Cover the rounding of the subtraction above.
  Tmp slack;
  mpfr_abs(slack, r.value_, MPFR_RNDU);
  mpfr_div_2si(slack, slack, static_cast<long>(r.precision()) - 1, MPFR_RNDU);
  mpfr_add(e, e, slack, MPFR_RNDU);
  mpfr_add(r.value_, r.value_, e, MPFR_RNDU);
  return r;
}

BigFloat operator+(const BigFloat& x, const BigFloat& y) {
  BigFloat r(joint_precision(x, y));
  mpfr_add(r.error_, x.error_, y.error_, MPFR_RNDU);
  r.add_rounding(mpfr_add(r.value_, x.value_, y.value_, MPFR_RNDN));
  return r;
}

BigFloat operator-(const BigFloat& x) {
  BigFloat r = x;
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& x, const BigFloat& y) { return x + (-y); }

BigFloat operator*(const BigFloat& x, const BigFloat& y) {
  BigFloat r(joint_precision(x, y));
  // |x y - x~ y~| <= |x~| f + |y~| e + e f
  Tmp a, b, t;
  mpfr_abs(a, x.value_, MPFR_RNDU);
  mpfr_mul(a, a, y.error_, MPFR_RNDU);
  mpfr_abs(b, y.value_, MPFR_RNDU);
  mpfr_mul(b, b, x.error_, MPFR_RNDU);
  mpfr_mul(t, x.error_, y.error_, MPFR_RNDU);
  mpfr_add(r.error_, a, b, MPFR_RNDU);
  mpfr_add(r.error_, r.error_, t, MPFR_RNDU);
  r.add_rounding(mpfr_mul(r.value_, x.value_, y.value_, MPFR_RNDN));
  return r;
}

BigFloat operator/(const BigFloat& x, const BigFloat& y) {
  // |x/y - x~/y~| <= (|x~| f + |y~| e) / (|y~| (|y~| - f))
  Tmp ylo;
  mpfr_abs(ylo, y.value_, MPFR_RNDD);
  Tmp gap;
  mpfr_sub(gap, ylo, y.error_, MPFR_RNDD);
  if (mpfr_sgn(gap.v) <= 0) throw InvalidInput("division by an enclosure containing zero");
  BigFloat r(joint_precision(x, y));
  Tmp a, b, den;
  mpfr_abs(a, x.value_, MPFR_RNDU);
  mpfr_mul(a, a, y.error_, MPFR_RNDU);
  mpfr_abs(b, y.value_, MPFR_RNDU);
  mpfr_mul(b, b, x.error_, MPFR_RNDU);
  mpfr_add(a, a, b, MPFR_RNDU);
  mpfr_mul(den, ylo, gap, MPFR_RNDD);
  mpfr_div(r.error_, a, den, MPFR_RNDU);
  r.add_rounding(mpfr_div(r.value_, x.value_, y.value_, MPFR_RNDN));
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  Tmp lower;
  mpfr_sub(lower, x.value_, x.error_, MPFR_RNDD);
  if (mpfr_sgn(lower.v) < 0) throw InvalidInput("square root of an enclosure reaching below zero");
  BigFloat r(x.precision());
  if (!x.is_exact()) {
    // |sqrt a - sqrt b| <= |a - b| / (sqrt a + sqrt b), and <= sqrt |a - b|.
    Tmp s1, s2;
    mpfr_sqrt(s1, lower, MPFR_RNDD);
    mpfr_sqrt(s2, x.value_, MPFR_RNDD);
    mpfr_add(s1, s1, s2, MPFR_RNDD);
    Tmp b1, b2;
    mpfr_sqrt(b2, x.error_, MPFR_RNDU);
    if (mpfr_sgn(s1.v) > 0) {
      mpfr_div(b1, x.error_, s1, MPFR_RNDU);
      mpfr_min(r.error_, b1, b2, MPFR_RNDU);
    } else {
      mpfr_set(r.error_, b2.v, MPFR_RNDU);
    }
  }
  r.add_rounding(mpfr_sqrt(r.value_, x.value_, MPFR_RNDN));
  return r;
}

BigFloat pow(const BigFloat& x, unsigned e) {
  BigFloat result = BigFloat::from_integer(1, x.precision());
  BigFloat base = x;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r = x;
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r = x;
  r.add_rounding(mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN));
  mpfr_mul_2si(r.error_, r.error_, e, MPFR_RNDU);
  return r;
}

namespace {

// 2^w atan(1/x) in fixed point; `terms` receives the number of series terms.
Integer atan_inv_fixed(unsigned long x, unsigned long w, long& terms) {
  Integer power = Integer(1) << w;
  power /= x;  // 2^w / x^(2i+1)
  const Integer x2 = Integer(x) * x;
  Integer sum = 0;
  terms = 0;
  for (unsigned long i = 0; power != 0; ++i) {
    const Integer term = power / (2 * i + 1);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power /= x2;
    ++terms;
  }
  return sum;
}

}  // namespace

BigFloat pi(long precision_bits) {
  if (precision_bits < 2) throw InvalidInput("precision out of range");
  const unsigned long w = static_cast<unsigned long>(precision_bits) + 32;
  long n1 = 0;
  long n2 = 0;
  const Integer a = atan_inv_fixed(5, w, n1);
  const Integer b = atan_inv_fixed(239, w, n2);
  const Integer fixed = 16 * a - 4 * b;
  // Truncated powers stay within 2 units of 2^w / x^(2i+1), so each term is
  // within 3 units and the dropped alternating tail is below 2 units.
  const Integer units = 16 * (3 * n1 + 2) + 4 * (3 * n2 + 2);
  BigFloat value = ldexp(BigFloat::from_integer(fixed, precision_bits), -static_cast<long>(w));
  BigFloat err = ldexp(BigFloat::from_integer(units, 64), -static_cast<long>(w));
  return BigFloat::with_error(value, err);
}

}  // namespace franel
