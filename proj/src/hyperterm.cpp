#include "franel/hyperterm.hpp"

#include "franel/errors.hpp"

namespace franel {

bool is_compatible(const HyperTerm& t) {
  const RatFunc lhs = t.rho_n.shift(0, 1) * t.rho_k;
  const RatFunc rhs = t.rho_k.shift(1, 0) * t.rho_n;
  return lhs == rhs;
}

HyperTerm make_hyperterm(RatFunc rho_n, RatFunc rho_k, std::string label) {
  if (rho_n.is_zero() || rho_k.is_zero()) throw InvalidInput("degenerate term: zero shift quotient");
  HyperTerm t{std::move(rho_n), std::move(rho_k), std::move(label), std::nullopt};
  if (!is_compatible(t)) throw InvalidInput("shift quotients are not compatible");
  return t;
}

HyperTerm binom_power_term(int s) {
  if (s < 1) throw InvalidInput("binomial power must be at least 1");
  const BiPoly n = BiPoly::n();
  const BiPoly k = BiPoly::k();
  const auto e = static_cast<unsigned>(s);
  RatFunc rho_k = pow(RatFunc(n - k, k + BiPoly(1L)), e);
  RatFunc rho_n = pow(RatFunc(n + BiPoly(1L), n + BiPoly(1L) - k), e);
  return HyperTerm{std::move(rho_n), std::move(rho_k), "binom(n,k)^" + std::to_string(s), s};
}

HyperTerm apery_term() {
  const BiPoly n = BiPoly::n();
  const BiPoly k = BiPoly::k();
  const BiPoly one(1L);
  RatFunc rho_n = pow(RatFunc(n + k + one, n + one - k), 2);
  RatFunc rho_k = pow(RatFunc((n - k) * (n + k + one), (k + one) * (k + one)), 2);
  return make_hyperterm(std::move(rho_n), std::move(rho_k), "binom(n,k)^2*binom(n+k,k)^2");
}

Rational term_eval(const HyperTerm& t, long n, long k) {
  if (t.binomial_power) {
    if (n < 0 || k < 0 || k > n) return 0;
    return Rational(ipow(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)),
                         static_cast<unsigned long>(*t.binomial_power)));
  }
  if (n < 0 || k < 0) throw InvalidInput("general terms are evaluated on n, k >= 0 only");
  Rational a = 1;
  for (long i = 0; i < n && a != 0; ++i) a *= t.rho_n(Rational(i), Rational(0));
  for (long j = 0; j < k && a != 0; ++j) a *= t.rho_k(Rational(n), Rational(j));
  return a;
}

RatFunc operator_ratio(const RecurrenceOperator& p, const HyperTerm& t) {
  RatFunc sigma(1L);
  RatFunc acc;
  for (int i = 0; i <= p.order(); ++i) {
    if (i > 0) sigma = sigma * t.rho_n.shift(i - 1, 0);
    if (!p[i].is_zero()) acc = acc + RatFunc(BiPoly::from_n(p[i])) * sigma;
  }
  return acc;
}

}  // namespace franel
