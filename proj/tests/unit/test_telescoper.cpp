#include <doctest.h>

#include "franel/errors.hpp"
#include "franel/sequences.hpp"
#include "franel/telescoper.hpp"

using namespace franel;

namespace {

const BiPoly n = BiPoly::n();
const BiPoly k = BiPoly::k();

std::vector<Rational> franel_values(int s, long n_max) {
  std::vector<Rational> u;
  for (long i = 0; i <= n_max; ++i) u.emplace_back(franel::franel(s, i));
  return u;
}

const TelescopeResult& result_for(int s) {
  static std::vector<TelescopeResult> cache;
  while (static_cast<int>(cache.size()) < s) {
    const int next = static_cast<int>(cache.size()) + 1;
    cache.push_back(zeilberger(binom_power_term(next), (next + 1) / 2 + 1));
  }
  return cache[static_cast<std::size_t>(s - 1)];
}

}  // namespace

TEST_CASE("telescoper: s = 1 gives N - 2") {
  const TelescopeResult r = zeilberger(binom_power_term(1), 2);
  CHECK(r.op == RecurrenceOperator({UPoly(-2L), UPoly(1L)}));
  std::vector<Rational> u;
  for (long i = 0; i <= 21; ++i) u.emplace_back(Integer(1) << static_cast<unsigned long>(i));
  for (long i = 0; i <= 20; ++i) CHECK(apply_operator(r.op, u, i) == 0);
}

TEST_CASE("telescoper: known orders") {
  CHECK(zeilberger(binom_power_term(3), 3).op.order() == 2);
  CHECK(zeilberger(binom_power_term(5), 4).op.order() == 3);
}

TEST_CASE("telescoper: s = 2 operator is (n+1) N - 2(2n+1)") {
  const UPoly x = UPoly::variable();
  CHECK(result_for(2).op == RecurrenceOperator({UPoly(-2L) * (UPoly(2L) * x + UPoly(1L)), x + UPoly(1L)}));
}

TEST_CASE("telescoper: s = 3 operator is Franel's recurrence") {
  // (n+2)^2 u(n+2) - (7n^2 + 21n + 16) u(n+1) - 8 (n+1)^2 u(n) = 0
  const UPoly x = UPoly::variable();
  const RecurrenceOperator expected({UPoly(-8L) * pow(x + UPoly(1L), 2), -UPoly({16, 21, 7}), pow(x + UPoly(2L), 2)});
  CHECK(result_for(3).op == expected);
}

TEST_CASE("telescoper: round trip, order, annihilation, normalization for s = 1..6") {
  for (int s = 1; s <= 6; ++s) {
    CAPTURE(s);
    const TelescopeResult& r = result_for(s);
    CHECK(r.op.order() == (s + 1) / 2);
    CHECK(r.op.is_normalized());
    CHECK(verify_certificate(binom_power_term(s), r.op, r.certificate));
    const auto u = franel_values(s, 40 + r.op.order());
    for (long i = 0; i <= 40; ++i) CHECK(apply_operator(r.op, u, i) == 0);
  }
}

TEST_CASE("telescoper: order m - 1 is unsolvable for s = 3..6") {
  for (int s = 3; s <= 6; ++s) {
    CAPTURE(s);
    const TelescopeResult& r = result_for(s);
    const int m = (s + 1) / 2;
    REQUIRE(r.attempts.size() == static_cast<std::size_t>(m));
    CHECK_FALSE(r.attempts[static_cast<std::size_t>(m - 2)].solvable);
    CHECK(r.attempts.back().solvable);
    OrderAttempt a;
    CHECK_FALSE(telescope_at_order(binom_power_term(s), m - 1, &a).has_value());
    CHECK(a.order == m - 1);
    CHECK_FALSE(a.solvable);
  }
}

TEST_CASE("telescoper: structure for s = 2..6") {
  const int degrees[] = {0, 1, 2, 3, 6, 9};
  for (int s = 1; s <= 6; ++s) {
    CAPTURE(s);
    const TelescopeResult& r = result_for(s);
    const StructureReport rep = analyze_structure(r.op, r.certificate, s);
    CHECK(rep.expected_degree == degrees[s - 1]);
    CHECK(rep.coeff_degree == rep.expected_degree);
    CHECK(rep.order == rep.expected_order);
    CHECK(rep.denominator_matches);
    CHECK(rep.denominator_divides);
    CHECK(rep.numerator_k_degree == rep.expected_numerator_k_degree);
    CHECK(rep.integer_roots_of_denominator_in_n.empty());
    CHECK(rep.first_valid_n() == 0);
  }
}

TEST_CASE("telescoper: expected degree formulas") {
  CHECK(expected_coeff_degree(3) == 2);
  CHECK(expected_coeff_degree(4) == 3);
  CHECK(expected_order(6) == 3);
  CHECK(expected_numerator_k_degree(4) == 9);
  CHECK(pochhammer_denominator(4, 2) == pow(n - k + BiPoly(1L), 4) * pow(n - k + BiPoly(2L), 4));
}

TEST_CASE("telescoper: denominator roots in n are detected") {
  const RecurrenceOperator p({UPoly(1L)});
  const Certificate c{RatFunc(k, (n - BiPoly(3L)) * (n - k + BiPoly(1L)))};
  const StructureReport rep = analyze_structure(p, c, 1);
  REQUIRE(rep.integer_roots_of_denominator_in_n.size() == 1);
  CHECK(rep.integer_roots_of_denominator_in_n[0] == 3);
  CHECK(rep.first_valid_n() == 4);
  CHECK_FALSE(rep.denominator_matches);
}

TEST_CASE("telescoper: verification rejects wrong certificates") {
  const HyperTerm t = binom_power_term(3);
  const CertificateCheck c = check_certificate(t, RecurrenceOperator({UPoly(1L)}), Certificate{RatFunc()});
  CHECK_FALSE(c.ok);
  CHECK(c.residual == RatFunc(1L));
  const TelescopeResult& r = result_for(3);
  CHECK_FALSE(verify_certificate(t, r.op, Certificate{r.certificate.R + RatFunc(1L)}));
}

TEST_CASE("telescoper: no telescoper within r_max") {
  try {
    (void)zeilberger(binom_power_term(3), 1);
    FAIL("expected NoTelescoperFound");
  } catch (const NoTelescoperFound& e) {
    REQUIRE(e.attempts().size() == 1);
    CHECK(e.attempts()[0].order == 1);
    CHECK_FALSE(e.attempts()[0].solvable);
  }
  CHECK_THROWS_AS(zeilberger(binom_power_term(3), 0), InvalidInput);
}

TEST_CASE("telescoper: Gosper-summable order 0 is found when enabled") {
  // binom(n, k) is not Gosper-summable in k, so order 0 fails and order 1 succeeds.
  const TelescopeResult r = zeilberger(binom_power_term(1), 2, {.try_order_zero = true});
  REQUIRE(r.attempts.size() == 2);
  CHECK(r.attempts[0].order == 0);
  CHECK_FALSE(r.attempts[0].solvable);
  CHECK(r.op.order() == 1);
}

TEST_CASE("telescoper: apply_operator examples") {
  const std::vector<Rational> pow2{1, 2, 4, 8, 16, 32, 64, 128, 256};
  CHECK(apply_operator(RecurrenceOperator({UPoly(-2L), UPoly(1L)}), pow2, 7) == 0);
  CHECK(apply_operator(RecurrenceOperator({UPoly(1L)}), pow2, 5) == 32);
  std::vector<Rational> a;
  for (long i = 0; i <= 4; ++i) a.emplace_back(apery_a(i));
  CHECK(apply_operator(apery_operator(), a, 1) == 0);
  CHECK_THROWS_AS(apply_operator(apery_operator(), a, 3), InvalidInput);
}

TEST_CASE("telescoper: the Apery summand telescopes at order 2") {
  const HyperTerm t = apery_term();
  const TelescopeResult r = zeilberger(t, 2);
  CHECK(r.op.order() == 2);
  CHECK(verify_certificate(t, r.op, r.certificate));
  CHECK(r.op == apery_operator());
}
