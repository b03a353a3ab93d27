#pragma once

#include <string>
#include <vector>

#include "franel/bigfloat.hpp"
#include "franel/integer.hpp"
#include "franel/sequences.hpp"

namespace franel {

/// Coefficients of t^(2j) in (t / sin t)^s, j = 0..J.
struct PhiTable {
  int s = 1;
  std::vector<Rational> phis;
};

PhiTable phi(int s, int J);

/// r_j with [t^(2j)] pi t / sin(pi t) = r_j pi^(2j), from
/// (2 - 2^(2-2j)) zeta(2j) and zeta(2j) = (-1)^(j+1) B_2j (2 pi)^(2j) / (2 (2j)!).
std::vector<Rational> pi_sin_zeta_coeffs(int J);

/// c pi^(2j) at the given precision.
BigFloat rational_times_pi_power(const Rational& c, int j, long precision_bits);

/// A_j(n) / A_0(n) rounded from the exact ratio. Throws InvalidInput when the
/// table lacks row n or column j, or for precision below 64 bits.
BigFloat limit_estimate(const SequenceTable& table, int j, long n, long precision_bits);

struct LimitReport {
  int s = 1;
  int j = 0;
  long n_used = 0;
  BigFloat estimate{64};
  BigFloat target{64};
  /// Upper bound on |exact ratio - phi_j pi^(2j)|.
  BigFloat abs_error{64};
  /// (r(n) - r(n-1)) / (r(n-1) - r(n-2)) from the exact ratios r.
  BigFloat successive_diff_ratio{64};
  /// Over the trailing window: largest |successive_diff_ratio| and whether
  /// the distance to the target decreased at every step.
  double max_window_ratio = 0.0;
  bool window_monotone = false;
  long window = 0;
};

/// The normalized form A_j(n) / (A_j(1) A_0(n)) against its zeta-value limit:
/// "B" is j = 1 with zeta(2)/(s+1), "C" is j = 2 with
/// 3(5s+2) zeta(4) / ((s+1)(s+2)(s+3)).
struct NormalizedLimitReport {
  std::string name;
  int s = 1;
  int j = 0;
  long n_used = 0;
  BigFloat estimate{64};
  BigFloat target{64};
  BigFloat abs_error{64};
};

struct LimitSummary {
  std::vector<LimitReport> reports;
  std::vector<NormalizedLimitReport> normalized;
};

/// Throws InvalidInput for J > floor((s-1)/2) unless force is set, or when
/// n_max leaves fewer than 3 rows for the window.
LimitSummary limit_report(int s, long n_max, int J, long precision_bits, long window = 50, bool force = false);

/// A^(s)(n) sqrt(s (pi n / 2)^(s-1)) / 2^(ns).
BigFloat asymptotic_ratio(int s, long n, long precision_bits);

/// 6 B(n) / A(n) for the Apery sequences.
BigFloat apery_zeta3_limit(long n, long precision_bits);

}  // namespace franel
