#include "franel/sequences.hpp"

#include <string>

#include "franel/errors.hpp"
#include "franel/telescoper.hpp"

namespace franel {

namespace {

void check_s(int s) {
  if (s < 1) throw InvalidInput("s must be at least 1");
}

void check_n(long n) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
}

void check_J(int J) {
  if (J < 0) throw InvalidInput("J must be nonnegative");
}

Integer binom_pow(long n, long k, int s) {
  return ipow(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)), static_cast<unsigned long>(s));
}

}  // namespace

Integer franel(int s, long n) {
  check_s(s);
  check_n(n);
  Integer sum = 0;
  Integer b = 1;  // binom(n, k)
  for (long k = 0; k <= n; ++k) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(s));
    sum += p;
    b = b * (n - k) / (k + 1);
  }
  return sum;
}

bool DeformedSeries::odd_part_vanishes() const {
  for (int i = 1; i <= series.order(); i += 2) {
    if (series[i] != 0) return false;
  }
  return true;
}

TruncSeries deformed_summand(int s, long n, long k, int J) {
  check_s(s);
  check_n(n);
  check_J(J);
  if (k < 0 || k > n) throw InvalidInput("k outside 0..n");
  const int T = 2 * J + 1;
  TruncSeries bracket = TruncSeries::constant(1, T);
  for (long j = 1; j <= k; ++j) bracket.mul_linear(Rational(-1, j));
  for (long j = 1; j <= n - k; ++j) bracket.mul_linear(Rational(1, j));
  TruncSeries out = series_pow(series_inv(bracket), static_cast<unsigned>(s));
  out *= Rational(binom_pow(n, k, s));
  return out;
}

DeformedSeries deformed(int s, long n, int J) {
  check_s(s);
  check_n(n);
  check_J(J);
  const int T = 2 * J + 1;
  // g = bracket^(-s), starting from k = 0: prod_{j=1}^{n} (1 + t/j)^(-s).
  TruncSeries g = TruncSeries::constant(1, T);
  for (long j = 1; j <= n; ++j) {
    const Rational a(1, j);
    for (int e = 0; e < s; ++e) g.div_linear(a);
  }
  TruncSeries sum(T);
  Integer b = 1;
  for (long k = 0; k <= n; ++k) {
    sum += g * Rational(ipow(b, static_cast<unsigned long>(s)));
    if (k == n) break;
    // k -> k+1: the bracket gains (1 - t/(k+1)) and loses (1 + t/(n-k)).
    const Rational down(-1, k + 1);
    const Rational up(1, n - k);
    for (int e = 0; e < s; ++e) {
      g.div_linear(down);
      g.mul_linear(up);
    }
    b = b * (n - k) / (k + 1);
  }
  DeformedSeries out{s, n, std::move(sum)};
  if (!out.odd_part_vanishes()) {
    throw Error("deformed sum has a nonzero odd coefficient at s=" + std::to_string(s) + ", n=" + std::to_string(n));
  }
  return out;
}

std::vector<Rational> coefficient_row(int s, long n, int J) {
  const DeformedSeries d = deformed(s, n, J);
  std::vector<Rational> row;
  row.reserve(static_cast<std::size_t>(J) + 1);
  for (int j = 0; j <= J; ++j) row.push_back(d.even(j));
  return row;
}

const std::vector<Rational>& SequenceTable::row(long n) const {
  if (!has_row(n)) throw InvalidInput("table has no row n=" + std::to_string(n));
  return rows[static_cast<std::size_t>(n - n_min)];
}

std::vector<Rational> SequenceTable::column(int j) const {
  if (j < 0 || j > J) throw InvalidInput("column index out of range");
  std::vector<Rational> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[static_cast<std::size_t>(j)]);
  return out;
}

SequenceTable coefficient_table(int s, long n_max, int J) { return coefficient_table(s, 0, n_max, J); }

SequenceTable coefficient_table(int s, long n_min, long n_max, int J) {
  check_s(s);
  check_J(J);
  check_n(n_min);
  if (n_max < n_min) throw InvalidInput("n_max below n_min");
  SequenceTable t;
  t.s = s;
  t.J = J;
  t.n_min = n_min;
  t.rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (long n = n_min; n <= n_max; ++n) t.rows.push_back(coefficient_row(s, n, J));
  return t;
}

std::vector<Rational> recurrence_forward(const RecurrenceOperator& p, std::vector<Rational> initial, long n_max) {
  const int r = p.order();
  if (static_cast<long>(initial.size()) < r) throw InvalidInput("recurrence_forward: too few initial values");
  std::vector<Rational> u = std::move(initial);
  while (static_cast<long>(u.size()) <= n_max) {
    const long n = static_cast<long>(u.size()) - r;
    const Integer lead = p[r](Integer(n));
    if (lead == 0) throw Error("recurrence_forward: leading coefficient vanishes at n=" + std::to_string(n));
    Rational acc = 0;
    for (int i = 0; i < r; ++i) {
      if (p[i].is_zero()) continue;
      acc += Rational(p[i](Integer(n))) * u[static_cast<std::size_t>(n + i)];
    }
    u.push_back(-acc / Rational(lead));
  }
  u.resize(static_cast<std::size_t>(std::max(n_max + 1, 0L)));
  return u;
}

bool AnnihilationReport::ok() const {
  for (const auto& v : violations) {
    if (v.j <= exact_j_max) return false;
  }
  return true;
}

AnnihilationReport annihilation_check(int s, const RecurrenceOperator& p, int j_max, long n_from, long n_to) {
  check_s(s);
  check_J(j_max);
  check_n(n_from);
  if (n_to < n_from) throw InvalidInput("n_to below n_from");
  AnnihilationReport rep;
  rep.s = s;
  rep.j_max = j_max;
  rep.n_from = n_from;
  rep.n_to = n_to;
  rep.exact_j_max = (s - 1) / 2;
  const SequenceTable table = coefficient_table(s, n_from, n_to + p.order(), j_max);
  for (int j = 0; j <= j_max; ++j) {
    const std::vector<Rational> u = table.column(j);
    for (long n = n_from; n <= n_to; ++n) {
      Rational acc = 0;
      for (int i = 0; i <= p.order(); ++i) {
        acc += Rational(p[i](Integer(n))) * u[static_cast<std::size_t>(n - n_from + i)];
      }
      if (acc != 0) rep.violations.push_back({j, n, acc});
    }
  }
  return rep;
}

Integer apery_a(long n) {
  check_n(n);
  Integer sum = 0;
  for (long k = 0; k <= n; ++k) {
    const Integer a = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    const Integer b = binomial(static_cast<unsigned long>(n + k), static_cast<unsigned long>(k));
    sum += a * a * b * b;
  }
  return sum;
}

RecurrenceOperator apery_operator() {
  // (n+2)^3 N^2 - (2n+3)(17n^2+51n+39) N + (n+1)^3
  const UPoly n = UPoly::variable();
  const UPoly c2 = pow(n + UPoly(2L), 3);
  const UPoly c1 = -((UPoly(2L) * n + UPoly(3L)) * (UPoly(17L) * n * n + UPoly(51L) * n + UPoly(39L)));
  const UPoly c0 = pow(n + UPoly(1L), 3);
  return RecurrenceOperator({c0, c1, c2});
}

std::vector<AperyPair> apery_zeta3(long n_max) {
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  const RecurrenceOperator p = apery_operator();
  const std::vector<Rational> a = recurrence_forward(p, {Rational(1), Rational(5)}, n_max);
  const std::vector<Rational> b = recurrence_forward(p, {Rational(0), Rational(1)}, n_max);
  std::vector<AperyPair> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    const Rational& an = a[static_cast<std::size_t>(n)];
    const Integer direct = apery_a(n);
    if (an.get_den() != 1 || an.get_num() != direct) {
      throw Error("Apery A(n): recursion and direct sum disagree at n=" + std::to_string(n));
    }
    out.push_back({n, direct, b[static_cast<std::size_t>(n)]});
  }
  return out;
}

}  // namespace franel
