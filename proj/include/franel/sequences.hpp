#pragma once

#include <vector>

#include "franel/integer.hpp"
#include "franel/operator.hpp"
#include "franel/series.hpp"

namespace franel {

/// sum_{k=0}^{n} binom(n, k)^s. Throws InvalidInput for s < 1 or n < 0.
Integer franel(int s, long n);

/// A^(s)(n, t) truncated after t^(2J+1).
struct DeformedSeries {
  int s = 1;
  long n = 0;
  TruncSeries series{1};

  /// Coefficient of t^(2j).
  const Rational& even(int j) const { return series[2 * j]; }
  bool odd_part_vanishes() const;
};

/// The k-th summand binom(n,k)^s [prod_{j<=k}(1 - t/j) prod_{j<=n-k}(1 + t/j)]^(-s),
/// expanded from scratch (reference for the incremental update).
TruncSeries deformed_summand(int s, long n, long k, int J);

/// Sums the per-k series with the incremental k -> k+1 product update.
/// Throws Error if an odd coefficient fails to vanish.
DeformedSeries deformed(int s, long n, int J);

/// A_0^(s)(n), ..., A_J^(s)(n).
std::vector<Rational> coefficient_row(int s, long n, int J);

struct SequenceTable {
  int s = 1;
  int J = 0;
  long n_min = 0;
  /// rows[i] holds A_0..A_J at n = n_min + i.
  std::vector<std::vector<Rational>> rows;

  long n_max() const { return n_min + static_cast<long>(rows.size()) - 1; }
  bool has_row(long n) const { return n >= n_min && n <= n_max(); }
  /// Throws InvalidInput when the row is missing.
  const std::vector<Rational>& row(long n) const;
  /// A_j(n_min), A_j(n_min + 1), ...
  std::vector<Rational> column(int j) const;
};

SequenceTable coefficient_table(int s, long n_max, int J);
/// Rows n_min..n_max only.
SequenceTable coefficient_table(int s, long n_min, long n_max, int J);

/// Extends u(0..r-1) to u(0..n_max) through P u = 0. Throws Error where the
/// leading coefficient vanishes.
std::vector<Rational> recurrence_forward(const RecurrenceOperator& p, std::vector<Rational> initial, long n_max);

struct AnnihilationViolation {
  int j = 0;
  long n = 0;
  Rational residue;
};

struct AnnihilationReport {
  int s = 1;
  int j_max = 0;
  long n_from = 0;
  long n_to = 0;
  /// Largest j covered by the exact-zero claim, floor((s-1)/2).
  int exact_j_max = 0;
  /// Every nonzero residue; entries with j > exact_j_max are informational.
  std::vector<AnnihilationViolation> violations;

  /// No violations with j <= exact_j_max.
  bool ok() const;
};

/// sum_i c_i(n) A_j^(s)(n + i) for j <= j_max and n_from <= n <= n_to.
AnnihilationReport annihilation_check(int s, const RecurrenceOperator& p, int j_max, long n_from, long n_to);

struct AperyPair {
  long n = 0;
  Integer A;
  Rational B;
};

/// sum_k binom(n,k)^2 binom(n+k,k)^2.
Integer apery_a(long n);

/// (n+1)^3 u(n+1) = (2n+1)(17n^2+17n+5) u(n) - n^3 u(n-1).
RecurrenceOperator apery_operator();

/// Rows n = 0..n_max. A is taken from the recursion and checked against the
/// direct sum (Error on mismatch); B(0) = 0, B(1) = 1.
std::vector<AperyPair> apery_zeta3(long n_max);

}  // namespace franel
