#include "franel/telescoper.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "franel/linsolve.hpp"

namespace franel {

namespace {

bool is_one(const BiPoly& p) { return p.is_constant() && !p.is_zero() && p.lead_coeff() == 1; }

BiPoly lcm(const BiPoly& a, const BiPoly& b) {
  const BiPoly g = gcd(a, b);
  if (is_one(g)) return a * b;
  return a * divexact(b, g);
}

// ceil(2 * max_i |a_{d-i} / a_d|^(1/i)): bounds the absolute value of every root.
Integer root_bound(const UPoly& p) {
  const int d = p.degree();
  Integer best = 0;
  const Integer lead = abs(p.lead());
  for (int i = 1; i <= d; ++i) {
    Integer a = abs(p[d - i]);
    if (a == 0) continue;
    Integer ratio;
    mpz_cdiv_q(ratio.get_mpz_t(), a.get_mpz_t(), lead.get_mpz_t());
    Integer root;
    mpz_root(root.get_mpz_t(), ratio.get_mpz_t(), static_cast<unsigned long>(i));
    root += 1;
    best = std::max(best, root);
  }
  return 2 * best;
}

constexpr std::array<long, 8> kDispersionProbes{13, 17, 19, 23, 29, 31, 37, 41};

// Smallest j >= 1 with deg_k gcd(q(k), b(k + j)) > 0, if any.
std::optional<long> first_dispersion(const BiPoly& q, const BiPoly& b) {
  if (q.deg_k() <= 0 || b.deg_k() <= 0) return std::nullopt;
  const UPoly lq = q.k_coeff(q.deg_k());
  const UPoly lb = b.k_coeff(b.deg_k());
  for (long probe : kDispersionProbes) {
    const Integer n0(probe);
    if (lq(n0) == 0 || lb(n0) == 0) continue;
    const UPoly qs = q.at_n(n0);
    const UPoly bs = b.at_n(n0);
    const Integer bound = root_bound(qs) + root_bound(bs);
    if (bound > 1000000) throw Error("dispersion scan: root bound too large");
    const long jmax = bound.get_si();
    for (long j = 1; j <= jmax; ++j) {
      if (gcd(qs, bs.shift(j)).degree() <= 0) continue;
      // Specialization can create spurious common roots; confirm in Z[n, k].
      if (gcd(q, b.shift(0, j)).deg_k() > 0) return j;
    }
    return std::nullopt;
  }
  throw Error("dispersion scan: no admissible evaluation point");
}

// Degree bound for f in q(k) f(k+1) - r(k) f(k) = p(k) over Q(n)[k].
int gosper_degree_bound(const BiPoly& q, const BiPoly& r, int deg_p) {
  const BiPoly diff = q - r;
  const BiPoly sum = q + r;
  const int dd = diff.is_zero() ? -1 : diff.deg_k();
  const int ds = sum.is_zero() ? -1 : sum.deg_k();
  if (dd >= ds) return deg_p - dd;
  int bound = deg_p - ds + 1;
  // Degenerate case: the top coefficient cancels when deg f equals
  // L = -2 [k^(ds-1)] (q - r) / lc_k(q + r), if that is a nonnegative integer.
  const UPoly a = diff.k_coeff(ds - 1);
  const UPoly lc = sum.k_coeff(ds);
  if (a.is_zero()) return std::max(bound, 0);
  if (a.degree() == lc.degree() && a * lc.lead() == lc * a.lead()) {
    const Rational L = ratio(-2 * a.lead(), lc.lead());
    if (L.get_den() == 1 && L >= 0) bound = std::max(bound, static_cast<int>(L.get_num().get_si()));
  }
  return bound;
}

std::string describe(const std::vector<OrderAttempt>& attempts) {
  std::ostringstream os;
  os << "no telescoper found; orders tried:";
  for (const auto& a : attempts) os << ' ' << a.order;
  return os.str();
}

}  // namespace

NoTelescoperFound::NoTelescoperFound(std::vector<OrderAttempt> attempts)
    : Error(describe(attempts)), attempts_(std::move(attempts)) {}

std::optional<TelescopeResult> telescope_at_order(const HyperTerm& t, int order, OrderAttempt* attempt) {
  if (order < 0) throw InvalidInput("negative trial order");
  if (t.rho_n.is_zero() || t.rho_k.is_zero()) throw InvalidInput("degenerate term: zero shift quotient");
  OrderAttempt info;
  info.order = order;

  // sigma_i = a(n+i, k) / a(n, k) = P_i / L over a common denominator L.
  std::vector<RatFunc> sigma{RatFunc(1L)};
  for (int i = 1; i <= order; ++i) sigma.push_back(sigma.back() * t.rho_n.shift(i - 1, 0));
  BiPoly L(1L);
  for (const auto& s : sigma) L = lcm(L, s.den());
  std::vector<BiPoly> P;
  for (const auto& s : sigma) P.push_back(s.num() * divexact(L, s.den()));

  // h(k) = a(n, k) / L(n, k); bring h(k+1)/h(k) into Gosper form.
  const RatFunc ratio = t.rho_k * RatFunc(L, L.shift(0, 1));
  BiPoly q = ratio.num();
  BiPoly b = ratio.den();
  BiPoly p0(1L);
  while (auto j = first_dispersion(q, b)) {
    const BiPoly g = gcd(q, b.shift(0, *j));
    q = divexact(q, g);
    b = divexact(b, g.shift(0, -*j));
    for (long i = 1; i <= *j; ++i) p0 = p0 * g.shift(0, -i);
  }
  const BiPoly r = b.shift(0, -1);

  int deg_p = -1;
  for (const auto& pi : P) deg_p = std::max(deg_p, pi.deg_k());
  deg_p += std::max(0, p0.deg_k());
  const int D = gosper_degree_bound(q, r, deg_p);
  info.gosper_degree = D;

  // Columns: f_D, ..., f_0, c_0, ..., c_r. Rows: coefficients of k^e of
  // q(k) f(k+1) - r(k) f(k) - p0(k) sum_i c_i P_i(k).
  std::vector<BiPoly> columns;
  const BiPoly kvar = BiPoly::k();
  const BiPoly k1 = kvar + BiPoly(1L);
  for (int j = std::max(D, -1); j >= 0; --j) {
    columns.push_back(q * pow(k1, static_cast<unsigned>(j)) - r * pow(kvar, static_cast<unsigned>(j)));
  }
  const int f_cols = static_cast<int>(columns.size());
  for (const auto& pi : P) columns.push_back(-(p0 * pi));
  int max_deg = 0;
  for (const auto& c : columns) max_deg = std::max(max_deg, c.deg_k());

  std::vector<std::vector<UPoly>> kc;
  kc.reserve(columns.size());
  for (const auto& c : columns) kc.push_back(c.k_coeffs());
  PolyMatrix m;
  for (int e = 0; e <= max_deg; ++e) {
    std::vector<UPoly> row(columns.size());
    bool nonzero = false;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (e < static_cast<int>(kc[c].size())) row[c] = kc[c][static_cast<std::size_t>(e)];
      nonzero = nonzero || !row[c].is_zero();
    }
    if (nonzero) m.push_back(std::move(row));
  }
  info.unknowns = static_cast<int>(columns.size());
  info.equations = static_cast<int>(m.size());

  const NullspaceResult ns = nullspace(std::move(m));
  info.rank = ns.rank;
  info.kernel_dimension = static_cast<int>(ns.basis.size());

  const std::vector<UPoly>* chosen = nullptr;
  for (const auto& v : ns.basis) {
    const bool has_c = std::any_of(v.begin() + f_cols, v.end(), [](const UPoly& x) { return !x.is_zero(); });
    if (has_c) {
      chosen = &v;
      break;
    }
  }
  info.solvable = chosen != nullptr;
  if (attempt != nullptr) *attempt = info;
  if (chosen == nullptr) return std::nullopt;

  std::vector<UPoly> c(chosen->begin() + f_cols, chosen->end());
  const RecurrenceOperator raw(c);
  UPoly g;
  for (const auto& x : raw.coeffs()) g = gcd(g, x);
  if (raw.coeffs().back().lead() < 0) g = -g;
  std::vector<UPoly> normalized;
  for (const auto& x : raw.coeffs()) normalized.push_back(divexact(x, g));
  RecurrenceOperator op(std::move(normalized));

  std::vector<UPoly> f(static_cast<std::size_t>(f_cols));
  for (int j = 0; j < f_cols; ++j) f[static_cast<std::size_t>(f_cols - 1 - j)] = (*chosen)[static_cast<std::size_t>(j)];
  const BiPoly F = BiPoly::from_k_coeffs(f);
  Certificate cert{RatFunc(r * F, p0 * L * BiPoly::from_n(g))};

  TelescopeResult result{std::move(op), std::move(cert), {info}};
  return result;
}

TelescopeResult zeilberger(const HyperTerm& t, int r_max, const ZeilbergerOptions& options) {
  if (r_max < 1) throw InvalidInput("r_max must be at least 1");
  if (t.rho_n.is_zero() || t.rho_k.is_zero()) throw InvalidInput("degenerate term: zero shift quotient");
  std::vector<OrderAttempt> attempts;
  for (int r = options.try_order_zero ? 0 : 1; r <= r_max; ++r) {
    OrderAttempt info;
    auto found = telescope_at_order(t, r, &info);
    attempts.push_back(info);
    if (found) {
      found->attempts = std::move(attempts);
      return std::move(*found);
    }
  }
  throw NoTelescoperFound(std::move(attempts));
}

CertificateCheck check_certificate(const HyperTerm& t, const RecurrenceOperator& p, const Certificate& c) {
  const RatFunc lhs = operator_ratio(p, t);
  const RatFunc rhs = c.R.shift(0, 1) * t.rho_k - c.R;
  CertificateCheck out;
  out.residual = lhs - rhs;
  out.ok = out.residual.is_zero();
  return out;
}

int expected_order(int s) { return (s + 1) / 2; }

int expected_coeff_degree(int s) {
  const int m = expected_order(s);
  Rational d;
  if (s % 2 == 0) {
    d = ratio(m * (m * m - 1), 3) + 1;
  } else {
    const int sign = (m % 2 == 0) ? 1 : -1;
    d = ratio(m * m * m, 3) - ratio(m * m, 2) + ratio(2 * m, 3) + ratio(sign - 1, 4);
  }
  return static_cast<int>(d.get_num().get_si());
}

int expected_numerator_k_degree(int s) { return expected_order(s) * s + (s % 2 == 0 ? 1 : 0); }

int expected_numerator_n_degree(int s) {
  const int d2 = s % 2 == 0 ? 1 : 0;
  const int d6 = s % 6 == 0 ? 1 : 0;
  return expected_coeff_degree(s) + s * (s - 1 - d2) / 2 - d6;
}

BiPoly pochhammer_denominator(int s, int m) {
  BiPoly out(1L);
  const BiPoly base = BiPoly::n() - BiPoly::k();
  for (int j = 1; j <= m; ++j) out = out * pow(base + BiPoly(static_cast<long>(j)), static_cast<unsigned>(s));
  return out;
}

long StructureReport::first_valid_n() const {
  if (integer_roots_of_denominator_in_n.empty()) return 0;
  return integer_roots_of_denominator_in_n.back().get_si() + 1;
}

StructureReport analyze_structure(const RecurrenceOperator& p, const Certificate& c, int s) {
  StructureReport rep;
  rep.s = s;
  rep.order = p.order();
  rep.expected_order = expected_order(s);
  rep.coeff_degree = p.coeff_degree();
  rep.expected_degree = expected_coeff_degree(s);
  rep.numerator_k_degree = c.R.num().deg_k();
  rep.expected_numerator_k_degree = expected_numerator_k_degree(s);
  rep.numerator_n_degree = c.R.num().deg_n();
  rep.expected_numerator_n_degree = expected_numerator_n_degree(s);

  const BiPoly& den = c.R.den();
  const BiPoly expected = pochhammer_denominator(s, rep.order);
  rep.denominator_matches = den == expected || den == -expected;
  try {
    (void)divexact(expected, den);
    rep.denominator_divides = true;
  } catch (const InvalidInput&) {
    rep.denominator_divides = false;
  }

  // (n - n0) | den(n, k) iff n0 is a root of the content of den in Z[n][k].
  const UPoly cont = k_content(den);
  if (cont.degree() > 0) rep.integer_roots_of_denominator_in_n = nonnegative_integer_roots(cont);
  return rep;
}

Rational apply_operator(const RecurrenceOperator& p, std::span<const Rational> u, long n) {
  if (n < 0 || static_cast<std::size_t>(n + p.order()) >= u.size())
    throw InvalidInput("apply_operator: sequence too short");
  Rational acc = 0;
  for (int i = 0; i <= p.order(); ++i) {
    if (p[i].is_zero()) continue;
    acc += Rational(p[i](Integer(n))) * u[static_cast<std::size_t>(n + i)];
  }
  return acc;
}

}  // namespace franel
