#include "franel/limits.hpp"

#include <algorithm>
#include <cmath>

#include "franel/bernoulli.hpp"
#include "franel/errors.hpp"
#include "franel/series.hpp"

namespace franel {

namespace {

constexpr long kMinPrecision = 64;

void check_precision(long bits) {
  if (bits < kMinPrecision) throw InvalidInput("precision must be at least 64 bits");
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

PhiTable phi(int s, int J) {
  if (s < 1) throw InvalidInput("s must be at least 1");
  if (J < 0) throw InvalidInput("J must be nonnegative");
  const TruncSeries f = series_pow(series_inv(sinc_series(2 * J)), static_cast<unsigned>(s));
  PhiTable t;
  t.s = s;
  for (int j = 0; j <= J; ++j) t.phis.push_back(f[2 * j]);
  return t;
}

std::vector<Rational> pi_sin_zeta_coeffs(int J) {
  if (J < 0) throw InvalidInput("J must be nonnegative");
  const BernoulliTable b = bernoulli(2 * J);
  std::vector<Rational> out{Rational(1)};
  for (int j = 1; j <= J; ++j) {
    // (2 - 2^(2-2j)) (-1)^(j+1) B_2j 2^(2j) / (2 (2j)!) = (-1)^(j+1) (2^(2j) - 2) B_2j / (2j)!
    const Integer two_pow = Integer(1) << static_cast<unsigned long>(2 * j);
    Rational r = Rational(two_pow - 2) * b[2 * j] / Rational(factorial(static_cast<unsigned long>(2 * j)));
    if (j % 2 == 0) r = -r;
    out.push_back(r);
  }
  return out;
}

BigFloat rational_times_pi_power(const Rational& c, int j, long precision_bits) {
  if (j < 0) throw InvalidInput("negative power of pi");
  const long work = precision_bits + 16;
  const BigFloat p = pow(pi(work), static_cast<unsigned>(2 * j));
  return BigFloat::from_rational(c, work) * p;
}

BigFloat limit_estimate(const SequenceTable& table, int j, long n, long precision_bits) {
  check_precision(precision_bits);
  if (j < 0 || j > table.J) throw InvalidInput("table has no column j");
  const std::vector<Rational>& row = table.row(n);
  return BigFloat::from_rational(row[static_cast<std::size_t>(j)] / row[0], precision_bits);
}

LimitSummary limit_report(int s, long n_max, int J, long precision_bits, long window, bool force) {
  check_precision(precision_bits);
  if (s < 1) throw InvalidInput("s must be at least 1");
  if (J < 0) throw InvalidInput("J must be nonnegative");
  if (!force && J > (s - 1) / 2) throw InvalidInput("J exceeds floor((s-1)/2)");
  if (n_max < 2) throw InvalidInput("n_max must be at least 2");
  if (window < 0) throw InvalidInput("negative window");
  window = std::min(window, n_max - 2);

  const long n_min = n_max - window - 2;
  const SequenceTable table = coefficient_table(s, std::max(n_min, 0L), n_max, J);
  const PhiTable ph = phi(s, J);

  LimitSummary out;
  for (int j = 0; j <= J; ++j) {
    LimitReport rep;
    rep.s = s;
    rep.j = j;
    rep.n_used = n_max;
    rep.window = window;
    rep.target = rational_times_pi_power(ph.phis[static_cast<std::size_t>(j)], j, precision_bits);
    rep.estimate = limit_estimate(table, j, n_max, precision_bits);
    rep.abs_error = distance_upper(rep.estimate, rep.target);

    std::vector<Rational> r;
    for (long n = table.n_min; n <= n_max; ++n) {
      const auto& row = table.row(n);
      r.push_back(row[static_cast<std::size_t>(j)] / row[0]);
    }
    auto diff_ratio = [&](std::size_t i) -> Rational {
      const Rational prev = r[i - 1] - r[i - 2];
      if (prev == 0) return Rational(0);
      return (r[i] - r[i - 1]) / prev;
    };
    rep.successive_diff_ratio = BigFloat::from_rational(diff_ratio(r.size() - 1), precision_bits);

    // Distances below the rounding floor of the target are treated as converged.
    const BigFloat floor_err = ldexp(abs_upper(rep.target), 8 - precision_bits);
    rep.window_monotone = true;
    rep.max_window_ratio = 0.0;
    BigFloat prev_dist = distance_upper(BigFloat::from_rational(r[r.size() - window - 1], precision_bits), rep.target);
    for (std::size_t i = r.size() - static_cast<std::size_t>(window); i < r.size(); ++i) {
      const Rational q = diff_ratio(i);
      rep.max_window_ratio = std::max(rep.max_window_ratio, std::abs(q.get_d()));
      const BigFloat dist = distance_upper(BigFloat::from_rational(r[i], precision_bits), rep.target);
      if (!(dist < prev_dist) && !(dist <= floor_err)) rep.window_monotone = false;
      prev_dist = dist;
    }
    out.reports.push_back(std::move(rep));
  }

  const std::vector<Rational> first = coefficient_row(s, 1, J);
  const auto& last = table.row(n_max);
  auto normalized = [&](const char* name, int j, const Rational& zeta_coeff) {
    NormalizedLimitReport rep;
    rep.name = name;
    rep.s = s;
    rep.j = j;
    rep.n_used = n_max;
    const Rational ratio = last[static_cast<std::size_t>(j)] / (first[static_cast<std::size_t>(j)] * last[0]);
    rep.estimate = BigFloat::from_rational(ratio, precision_bits);
    rep.target = rational_times_pi_power(zeta_coeff, j, precision_bits);
    rep.abs_error = distance_upper(rep.estimate, rep.target);
    out.normalized.push_back(std::move(rep));
  };
  // zeta(2) = pi^2 / 6, zeta(4) = pi^4 / 90.
  if (J >= 1) normalized("B", 1, Rational(1, 6 * (s + 1)));
  if (J >= 2) {
    Rational c(3 * (5 * s + 2), 90 * (s + 1) * (s + 2) * (s + 3));
    c.canonicalize();
    normalized("C", 2, c);
  }
  return out;
}

BigFloat asymptotic_ratio(int s, long n, long precision_bits) {
  check_precision(precision_bits);
  if (n < 1) throw InvalidInput("n must be at least 1");
  const long work = precision_bits + 16;
  const BigFloat a = BigFloat::from_integer(franel(s, n), work);
  const BigFloat half_pi_n = ldexp(pi(work) * BigFloat::from_integer(n, work), -1);
  const BigFloat factor = sqrt(BigFloat::from_integer(s, work) * pow(half_pi_n, static_cast<unsigned>(s - 1)));
  return ldexp(a * factor, -static_cast<long>(n) * s);
}

BigFloat apery_zeta3_limit(long n, long precision_bits) {
  check_precision(precision_bits);
  if (n < 1) throw InvalidInput("n must be at least 1");
  const std::vector<AperyPair> rows = apery_zeta3(n);
  const AperyPair& last = rows.back();
  return BigFloat::from_rational(6 * last.B / Rational(last.A), precision_bits);
}

}  // namespace franel
