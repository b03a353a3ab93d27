#pragma once

#include <optional>
#include <string>

#include "franel/operator.hpp"
#include "franel/ratfunc.hpp"

namespace franel {

/// A bivariate hypergeometric term a(n, k), given by its shift quotients.
struct HyperTerm {
  RatFunc rho_n;  // a(n+1, k) / a(n, k)
  RatFunc rho_k;  // a(n, k+1) / a(n, k)
  std::string label;
  // Set for binom(n, k)^s, which has support 0 <= k <= n.
  std::optional<int> binomial_power;
};

/// Mixed-shift consistency rho_n(n,k+1) rho_k(n,k) = rho_k(n+1,k) rho_n(n,k).
bool is_compatible(const HyperTerm& t);

/// A general term with a(0, 0) = 1. Throws InvalidInput for zero quotients
/// or incompatible shift quotients.
HyperTerm make_hyperterm(RatFunc rho_n, RatFunc rho_k, std::string label);

/// binom(n, k)^s. Throws InvalidInput for s < 1.
HyperTerm binom_power_term(int s);

/// binom(n, k)^2 binom(n + k, k)^2.
HyperTerm apery_term();

/// Exact a(n, k). Binomial powers are evaluated directly (zero outside
/// 0 <= k <= n); other terms multiply quotients from a(0, 0) = 1 along k = 0
/// and then in k, throwing PoleError when a quotient has a pole on the path.
Rational term_eval(const HyperTerm& t, long n, long k);

/// sum_i c_i(n) a(n+i, k) / a(n, k) as a normalized rational function.
RatFunc operator_ratio(const RecurrenceOperator& p, const HyperTerm& t);

}  // namespace franel
