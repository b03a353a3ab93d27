#include "franel/bipoly.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "franel/errors.hpp"

namespace franel {

namespace {

// Recursive view of Z[n][k]: index j holds the coefficient of k^j.
using KPoly = std::vector<UPoly>;

void trim(KPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int kdeg(const KPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly kcontent(const KPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.degree() == 0 && g.lead() == 1) break;
  }
  return g;
}

KPoly kdivexact(const KPoly& p, const UPoly& c) {
  KPoly q;
  q.reserve(p.size());
  if (c.degree() == 0) {
    for (const auto& x : p) q.push_back(divexact(x, c.lead()));
  } else {
    for (const auto& x : p) q.push_back(divexact(x, c));
  }
  return q;
}

KPoly kprimitive(const KPoly& p) {
  UPoly c = kcontent(p);
  if (c.degree() == 0 && c.lead() == 1) return p;
  return kdivexact(p, c);
}

KPoly kprem(KPoly a, const KPoly& b) {
  const int db = kdeg(b);
  const UPoly& lb = b.back();
  for (int top = kdeg(a); top >= db; --top) {
    UPoly t = a[static_cast<std::size_t>(top)];
    for (auto& x : a) x = x * lb;
    if (!t.is_zero()) {
      for (int j = 0; j <= db; ++j) {
        a[static_cast<std::size_t>(top - db + j)] -= t * b[static_cast<std::size_t>(j)];
      }
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

// Exact division in Z[n][k]; returns false when b does not divide a.
bool kdivide(const KPoly& a, const KPoly& b, KPoly& quotient) {
  KPoly rem = a;
  const int db = kdeg(b);
  if (kdeg(rem) < db) {
    quotient.clear();
    return rem.empty();
  }
  quotient.assign(static_cast<std::size_t>(kdeg(rem) - db + 1), UPoly());
  for (int top = kdeg(rem); top >= db; --top) {
    const UPoly& t = rem[static_cast<std::size_t>(top)];
    if (t.is_zero()) continue;
    UPoly q;
    try {
      q = divexact(t, b.back());
    } catch (const InvalidInput&) {
      return false;
    }
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(top - db + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    quotient[static_cast<std::size_t>(top - db)] = std::move(q);
  }
  trim(rem);
  trim(quotient);
  return rem.empty();
}

UPoly specialize(const KPoly& p, const Integer& n0) {
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& x : p) c.push_back(x(n0));
  return UPoly(std::move(c));
}

BiPoly sign_normalized(BiPoly p) {
  if (!p.is_zero() && p.lead_coeff() < 0) return -p;
  return p;
}

// Evaluation points for the k-degree probe in gcd().
constexpr std::array<long, 6> kProbePoints{1009, 2003, 4001, 7919, 15013, 30011};

}  // namespace

BiPoly::BiPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, Integer(c));
}

BiPoly::BiPoly(Integer c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, std::move(c));
}

BiPoly BiPoly::n() { return monomial(1, 1, 0); }
BiPoly BiPoly::k() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(Integer c, int deg_n, int deg_k) {
  BiPoly p;
  if (c != 0) p.terms_.emplace(Monomial{deg_n, deg_k}, std::move(c));
  return p;
}

BiPoly BiPoly::from_n(const UPoly& q) {
  BiPoly p;
  for (int i = 0; i <= q.degree(); ++i) {
    if (q[i] != 0) p.terms_.emplace(Monomial{i, 0}, q[i]);
  }
  return p;
}

BiPoly BiPoly::from_k(const UPoly& q) {
  BiPoly p;
  for (int i = 0; i <= q.degree(); ++i) {
    if (q[i] != 0) p.terms_.emplace(Monomial{0, i}, q[i]);
  }
  return p;
}

BiPoly BiPoly::from_k_coeffs(const std::vector<UPoly>& coeffs) {
  BiPoly p;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const UPoly& c = coeffs[j];
    for (int i = 0; i <= c.degree(); ++i) {
      if (c[i] != 0) p.terms_.emplace(Monomial{i, static_cast<int>(j)}, c[i]);
    }
  }
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

int BiPoly::deg_n() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_n);
  return d;
}

int BiPoly::deg_k() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_k);
  return d;
}

Integer BiPoly::coeff(int deg_n, int deg_k) const {
  auto it = terms_.find(Monomial{deg_n, deg_k});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<UPoly> BiPoly::k_coeffs() const {
  const int dk = deg_k();
  if (dk < 0) return {};
  std::vector<std::vector<Integer>> dense(static_cast<std::size_t>(dk) + 1);
  for (const auto& [m, c] : terms_) {
    auto& col = dense[static_cast<std::size_t>(m.deg_k)];
    if (static_cast<int>(col.size()) <= m.deg_n) col.resize(static_cast<std::size_t>(m.deg_n) + 1);
    col[static_cast<std::size_t>(m.deg_n)] = c;
  }
  std::vector<UPoly> out;
  out.reserve(dense.size());
  for (auto& col : dense) out.emplace_back(std::move(col));
  return out;
}

UPoly BiPoly::k_coeff(int j) const {
  std::vector<Integer> col;
  for (const auto& [m, c] : terms_) {
    if (m.deg_k != j) continue;
    if (static_cast<int>(col.size()) <= m.deg_n) col.resize(static_cast<std::size_t>(m.deg_n) + 1);
    col[static_cast<std::size_t>(m.deg_n)] = c;
  }
  return UPoly(std::move(col));
}

Rational BiPoly::operator()(const Rational& n, const Rational& k) const {
  const auto kc = k_coeffs();
  Rational acc = 0;
  for (auto it = kc.rbegin(); it != kc.rend(); ++it) {
    acc *= k;
    acc += (*it)(n);
  }
  return acc;
}

UPoly BiPoly::at_n(const Integer& n0) const { return specialize(k_coeffs(), n0); }

BiPoly BiPoly::shift(const Integer& dn, const Integer& dk) const {
  if (dn == 0 && dk == 0) return *this;
  KPoly a = k_coeffs();
  if (dn != 0) {
    for (auto& c : a) c = c.shift(dn);
  }
  if (dk != 0) {
    const std::size_t m = a.size();
    for (std::size_t i = 0; i + 1 < m; ++i) {
      for (std::size_t j = m - 1; j > i; --j) a[j - 1] += a[j] * dk;
    }
  }
  return from_k_coeffs(a);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int dn = a.deg_n() + b.deg_n();
  const int dk = a.deg_k() + b.deg_k();
  const std::size_t stride = static_cast<std::size_t>(dk) + 1;
  std::vector<Integer> grid((static_cast<std::size_t>(dn) + 1) * stride);
  std::vector<char> used(grid.size(), 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const std::size_t idx =
          static_cast<std::size_t>(ma.deg_n + mb.deg_n) * stride + static_cast<std::size_t>(ma.deg_k + mb.deg_k);
      mpz_addmul(grid[idx].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      used[idx] = 1;
    }
  }
  BiPoly r;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (!used[idx] || grid[idx] == 0) continue;
    r.terms_.emplace(Monomial{static_cast<int>(idx / stride), static_cast<int>(idx % stride)},
                     std::move(grid[idx]));
  }
  return r;
}

BiPoly pow(const BiPoly& p, unsigned e) {
  BiPoly result(1L);
  BiPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw InvalidInput("bivariate division by zero");
  if (a.is_zero()) return {};
  if (b.is_constant()) return divexact(a, b.lead_coeff());
  KPoly q;
  if (!kdivide(a.k_coeffs(), b.k_coeffs(), q))
    throw InvalidInput("divexact: divisor does not divide dividend");
  return BiPoly::from_k_coeffs(q);
}

BiPoly divexact(const BiPoly& a, const Integer& c) {
  if (c == 0) throw InvalidInput("bivariate division by zero");
  for (const auto& [m, x] : a.terms()) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw InvalidInput("divexact: scalar does not divide polynomial");
  }
  BiPoly out;
  for (const auto& [m, x] : a.terms()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    out += BiPoly::monomial(std::move(q), m.deg_n, m.deg_k);
  }
  return out;
}

Integer integer_content(const BiPoly& p) {
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly k_content(const BiPoly& p) { return kcontent(p.k_coeffs()); }

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd(0, 0) is undefined");
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);

  KPoly ka = a.k_coeffs();
  KPoly kb = b.k_coeffs();
  const UPoly ca = kcontent(ka);
  const UPoly cb = kcontent(kb);
  const UPoly cg = gcd(ca, cb);
  const BiPoly content_part = BiPoly::from_n(cg);
  if (kdeg(ka) == 0 || kdeg(kb) == 0) return sign_normalized(content_part);
  ka = kdivexact(ka, ca);
  kb = kdivexact(kb, cb);

  // Probe the k-degree of the gcd at an integer n where neither leading
  // coefficient vanishes: the specialized gcd has at least that degree.
  for (long n0 : kProbePoints) {
    const Integer x(n0);
    if (ka.back()(x) == 0 || kb.back()(x) == 0) continue;
    const UPoly g0 = gcd(specialize(ka, x), specialize(kb, x));
    if (g0.degree() == 0) return sign_normalized(content_part);
    KPoly q;
    if (g0.degree() == kdeg(kb) && kdivide(ka, kb, q))
      return sign_normalized(BiPoly::from_k_coeffs(kb) * content_part);
    if (g0.degree() == kdeg(ka) && kdivide(kb, ka, q))
      return sign_normalized(BiPoly::from_k_coeffs(ka) * content_part);
    break;
  }

  // Primitive pseudo-remainder sequence with k as main variable.
  if (kdeg(ka) < kdeg(kb)) std::swap(ka, kb);
  while (true) {
    KPoly r = kprem(ka, kb);
    if (r.empty()) break;
    ka = std::move(kb);
    if (kdeg(r) == 0) return sign_normalized(content_part);
    kb = kprimitive(r);
  }
  return sign_normalized(BiPoly::from_k_coeffs(kprimitive(kb)) * content_part);
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = abs(c);
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    const bool has_var = m.deg_n > 0 || m.deg_k > 0;
    bool need_star = false;
    if (!has_var || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    if (m.deg_n > 0) {
      os << (need_star ? "*" : "") << 'n';
      if (m.deg_n > 1) os << '^' << m.deg_n;
      need_star = true;
    }
    if (m.deg_k > 0) {
      os << (need_star ? "*" : "") << 'k';
      if (m.deg_k > 1) os << '^' << m.deg_k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace franel
