#include <doctest.h>

#include "franel/errors.hpp"
#include "franel/ratfunc.hpp"
#include "helpers.hpp"

using namespace franel;

namespace {

const BiPoly n = BiPoly::n();
const BiPoly k = BiPoly::k();

RatFunc random_ratfunc() {
  return RatFunc(testutil::random_bipoly(3, 6, 3), testutil::random_nonzero_bipoly(3, 6, 3));
}

bool is_one(const BiPoly& p) { return p.is_constant() && !p.is_zero() && p.lead_coeff() == 1; }

}  // namespace

TEST_CASE("ratfunc: lowest terms with positive leading denominator") {
  const RatFunc f((n - k) * (n + k), BiPoly(-2L) * (n - k));
  CHECK(f.num() == -(n + k));
  CHECK(f.den() == BiPoly(2L));
  CHECK(f.den().lead_coeff() > 0);
  CHECK(RatFunc(BiPoly(), n).den() == BiPoly(1L));
  CHECK_THROWS_AS(RatFunc(n, BiPoly()), InvalidInput);
}

TEST_CASE("ratfunc: normalization is idempotent") {
  for (int trial = 0; trial < 60; ++trial) {
    const RatFunc f = random_ratfunc();
    const RatFunc g(f.num(), f.den());
    CHECK(g.num() == f.num());
    CHECK(g.den() == f.den());
    if (!f.is_zero()) CHECK(is_one(gcd(f.num(), f.den())));
  }
}

TEST_CASE("ratfunc: field operations agree with pointwise evaluation") {
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const RatFunc f = random_ratfunc();
    const RatFunc g = random_ratfunc();
    const Rational x = testutil::small_rational(7);
    const Rational y = testutil::small_rational(7);
    try {
      const Rational fx = f(x, y);
      const Rational gx = g(x, y);
      CHECK((f + g)(x, y) == fx + gx);
      CHECK((f - g)(x, y) == fx - gx);
      CHECK((f * g)(x, y) == fx * gx);
      if (!g.is_zero() && gx != 0) CHECK((f / g)(x, y) == fx / gx);
      CHECK(pow(f, 3)(x, y) == fx * fx * fx);
      ++compared;
    } catch (const PoleError&) {
    }
  }
  CHECK(compared > 40);
}

TEST_CASE("ratfunc: shift") {
  const RatFunc f(n + BiPoly(1L), n - k);
  const RatFunc g = f.shift(1, -1);
  CHECK(g == RatFunc(n + BiPoly(2L), n - k + BiPoly(2L)));
}

TEST_CASE("ratfunc: evaluation at a pole throws") {
  const RatFunc f(BiPoly(1L), n - k);
  CHECK_THROWS_AS(f(Rational(2), Rational(2)), PoleError);
  CHECK(f(Rational(3), Rational(1)) == Rational(1, 2));
}

TEST_CASE("ratfunc: division by zero throws") { CHECK_THROWS_AS(RatFunc(n) / RatFunc(), InvalidInput); }
