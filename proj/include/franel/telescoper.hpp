#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "franel/errors.hpp"
#include "franel/hyperterm.hpp"
#include "franel/operator.hpp"
#include "franel/ratfunc.hpp"

namespace franel {

/// R(n, k) with b(n, k) = R(n, k) a(n, k) and P a = b(n, k+1) - b(n, k).
struct Certificate {
  RatFunc R;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Outcome of the parameterized Gosper system at one trial order.
struct OrderAttempt {
  int order = 0;
  bool solvable = false;
  int gosper_degree = -1;  // degree bound for the Gosper polynomial, -1 if none
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
  int kernel_dimension = 0;
};

struct TelescopeResult {
  RecurrenceOperator op;
  Certificate certificate;
  /// Every order tried, ascending; the last one is the solvable order.
  std::vector<OrderAttempt> attempts;
};

class NoTelescoperFound : public Error {
 public:
  explicit NoTelescoperFound(std::vector<OrderAttempt> attempts);
  const std::vector<OrderAttempt>& attempts() const { return attempts_; }

 private:
  std::vector<OrderAttempt> attempts_;
};

struct ZeilbergerOptions {
  /// Also try order 0, i.e. plain Gosper summability of the term.
  bool try_order_zero = false;
};

/// Solves the parameterized Gosper problem at exactly this order.
std::optional<TelescopeResult> telescope_at_order(const HyperTerm& t, int order, OrderAttempt* attempt = nullptr);

/// Creative telescoping: the least order r <= r_max admitting a telescoper,
/// the normalized operator, and its certificate in lowest terms.
/// Throws NoTelescoperFound (with the attempted orders) or InvalidInput.
TelescopeResult zeilberger(const HyperTerm& t, int r_max, const ZeilbergerOptions& options = {});

struct CertificateCheck {
  bool ok = false;
  /// operator_ratio(P, t) - (R(n, k+1) rho_k - R(n, k)); zero iff ok.
  RatFunc residual;
};

CertificateCheck check_certificate(const HyperTerm& t, const RecurrenceOperator& p, const Certificate& c);

inline bool verify_certificate(const HyperTerm& t, const RecurrenceOperator& p, const Certificate& c) {
  return check_certificate(t, p, c).ok;
}

struct StructureReport {
  int s = 0;
  int order = 0;
  int expected_order = 0;
  int coeff_degree = 0;
  int expected_degree = 0;
  /// Denominator equals prod_{j=1}^{m} (n - k + j)^s up to sign.
  bool denominator_matches = false;
  /// Denominator divides prod_{j=1}^{m} (n - k + j)^s.
  bool denominator_divides = false;
  int numerator_k_degree = 0;
  int expected_numerator_k_degree = 0;
  int numerator_n_degree = 0;
  int expected_numerator_n_degree = 0;
  /// n0 >= 0 with (n - n0) dividing the certificate denominator.
  std::vector<Integer> integer_roots_of_denominator_in_n;

  /// First n from which the telescoped recurrence holds for the deformed
  /// sums: 0 without such roots, otherwise one past the largest root.
  long first_valid_n() const;
};

int expected_order(int s);
/// Coefficient degree of the minimal telescoper observed for s <= 20.
int expected_coeff_degree(int s);
int expected_numerator_k_degree(int s);
int expected_numerator_n_degree(int s);
/// prod_{j=1}^{m} (n - k + j)^s.
BiPoly pochhammer_denominator(int s, int m);

StructureReport analyze_structure(const RecurrenceOperator& p, const Certificate& c, int s);

/// sum_i c_i(n) u(n + i), where u holds u(0), u(1), ...
Rational apply_operator(const RecurrenceOperator& p, std::span<const Rational> u, long n);

}  // namespace franel
