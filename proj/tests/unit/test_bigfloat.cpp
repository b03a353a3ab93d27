#include <doctest.h>

#include <functional>

#include "franel/bigfloat.hpp"
#include "franel/errors.hpp"
#include "helpers.hpp"

using namespace franel;

namespace {

constexpr const char* kPi100 =
    "3.141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825342117068";

Rational decimal(const std::string& s) {
  const auto dot = s.find('.');
  return ratio(Integer(s.substr(0, dot) + s.substr(dot + 1), 10), ipow(10, s.size() - dot - 1));
}

// Exact |x - q| <= error(x), checked through a higher-precision subtraction.
bool encloses(const BigFloat& x, const Rational& q) {
  const BigFloat d = distance_upper(x, BigFloat::from_rational(q, 4 * x.precision()));
  return d <= ldexp(x.error_bound(), 1) || d.to_double() == 0.0;
}

BigFloat random_pipeline(long bits, std::mt19937_64 g) {
  std::uniform_int_distribution<int> op(0, 5);
  std::uniform_int_distribution<long> v(1, 1000);
  BigFloat x = BigFloat::from_rational(ratio(v(g), v(g)), bits);
  for (int step = 0; step < 12; ++step) {
    const BigFloat y = BigFloat::from_rational(ratio(v(g), v(g)), bits);
    switch (op(g)) {
      case 0: x = x + y; break;
      case 1: x = x - y; break;
      case 2: x = x * y; break;
      case 3: x = x / y; break;
      case 4: x = sqrt(abs(x) + y); break;
      default: x = pow(x, 2) + y; break;
    }
  }
  return x;
}

}  // namespace

TEST_CASE("bigfloat: pi to 100 digits") {
  const BigFloat p = pi(400);
  CHECK(p.error_double() < 1e-110);
  const BigFloat ref = BigFloat::with_error(BigFloat::from_rational(decimal(kPi100), 400),
                                            BigFloat::from_rational(ratio(1, ipow(10, 99)), 64));
  CHECK(distance_upper(p, ref).to_double() < 2e-99);
  CHECK(p.to_string(20) == "3.1415926535897932385");
}

TEST_CASE("bigfloat: exact values stay exact") {
  const BigFloat a = BigFloat::from_integer(3, 64);
  const BigFloat b = BigFloat::from_integer(5, 64);
  CHECK((a + b).is_exact());
  CHECK((a * b).to_double() == 15.0);
  CHECK(BigFloat::from_rational(ratio(1, 4), 64).is_exact());
  CHECK_FALSE(BigFloat::from_rational(ratio(1, 3), 64).is_exact());
  CHECK(ldexp(a, 3).to_double() == 24.0);
}

TEST_CASE("bigfloat: enclosures of rational arithmetic contain the exact result") {
  for (int trial = 0; trial < 50; ++trial) {
    Rational q = testutil::small_rational(50);
    BigFloat x = BigFloat::from_rational(q, 80);
    for (int step = 0; step < 20; ++step) {
      Rational r = testutil::small_rational(50);
      if (r == 0) r = 1;
      const BigFloat y = BigFloat::from_rational(r, 80);
      switch (testutil::uniform(0, 3)) {
        case 0: q += r; x = x + y; break;
        case 1: q -= r; x = x - y; break;
        case 2: q *= r; x = x * y; break;
        default: q /= r; x = x / y; break;
      }
    }
    CHECK(encloses(x, q));
  }
}

TEST_CASE("bigfloat: error bounds are sound against 4x precision recomputation") {
  for (int trial = 0; trial < 50; ++trial) {
    const std::mt19937_64 seed(static_cast<unsigned long>(1000 + trial));
    const BigFloat lo = random_pipeline(96, seed);
    const BigFloat hi = random_pipeline(384, seed);
    CHECK(distance_upper(lo.midpoint(), hi.midpoint()) <= lo.error_bound() + hi.error_bound());
  }
}

TEST_CASE("bigfloat: comparisons and failures") {
  const BigFloat one = BigFloat::from_integer(1, 64);
  const BigFloat two = BigFloat::from_integer(2, 64);
  CHECK(certainly_distinct(one, two));
  CHECK_FALSE(certainly_distinct(one, BigFloat::with_error(two, one)));
  CHECK(one < two);
  CHECK(magnitude_upper(-two) >= 2.0);
  CHECK_THROWS_AS(one / BigFloat::with_error(BigFloat(64), one), InvalidInput);
  CHECK_THROWS_AS(sqrt(-one), InvalidInput);
  CHECK_THROWS_AS(BigFloat(1), InvalidInput);
}
