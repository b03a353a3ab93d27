#include "franel/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "franel/errors.hpp"

namespace franel {

namespace {
const Integer kZero = 0;
}

UPoly::UPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

UPoly::UPoly(Integer c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UPoly UPoly::monomial(Integer c, int degree) {
  UPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Integer(0));
  p.coeffs_.back() = std::move(c);
  return p;
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& UPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

Integer UPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Rational UPoly::operator()(const Rational& x) const {
  // Horner on numerator/denominator separately: sum c_i p^i q^(d-i) / q^d.
  if (coeffs_.empty()) return 0;
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  // acc = sum_i c_i p^i q^(deg - i)
  Integer acc = coeffs_.back();
  Integer qpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    qpow *= q;
    acc = acc * p + coeffs_[static_cast<std::size_t>(i)] * qpow;
  }
  Rational r(acc, qpow);
  r.canonicalize();
  return r;
}

UPoly UPoly::shift(const Integer& c) const {
  if (c == 0 || coeffs_.size() <= 1) return *this;
  // Taylor shift by repeated synthetic division.
  std::vector<Integer> a = coeffs_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      mpz_addmul(a[j - 1].get_mpz_t(), a[j].get_mpz_t(), c.get_mpz_t());
    }
  }
  return UPoly(std::move(a));
}

std::size_t UPoly::max_bits() const {
  std::size_t m = 0;
  for (const auto& c : coeffs_) m = std::max(m, bit_size(c));
  return m;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
    }
  }
  return UPoly(std::move(r));
}

UPoly pow(const UPoly& p, unsigned e) {
  UPoly result(1L);
  UPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

UPoly divexact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InvalidInput("divexact: divisor does not divide dividend");
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const auto& bc = b.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  Integer r;
  for (int i = a.degree() - db; i >= 0; --i) {
    Integer& top = rem[static_cast<std::size_t>(i + db)];
    if (top == 0) continue;
    mpz_tdiv_qr(q[static_cast<std::size_t>(i)].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                b.lead().get_mpz_t());
    if (r != 0) throw InvalidInput("divexact: divisor does not divide dividend");
    const mpz_srcptr qi = q[static_cast<std::size_t>(i)].get_mpz_t();
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), qi,
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (int j = 0; j < db; ++j) {
    if (rem[static_cast<std::size_t>(j)] != 0)
      throw InvalidInput("divexact: divisor does not divide dividend");
  }
  return UPoly(std::move(q));
}

UPoly divexact(const UPoly& a, const Integer& c) {
  if (c == 0) throw InvalidInput("polynomial division by zero");
  std::vector<Integer> q = a.coeffs();
  for (auto& x : q) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw InvalidInput("divexact: scalar does not divide polynomial");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return UPoly(std::move(q));
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvalidInput("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const auto& bc = b.coeffs();
  const Integer& lb = b.lead();
  for (int top = a.degree(); top >= db; --top) {
    Integer t = rem[static_cast<std::size_t>(top)];
    // rem <- lb * rem - t * x^(top-db) * b
    for (auto& x : rem) x *= lb;
    if (t != 0) {
      for (int j = 0; j <= db; ++j) {
        mpz_submul(rem[static_cast<std::size_t>(top - db + j)].get_mpz_t(), t.get_mpz_t(),
                   bc[static_cast<std::size_t>(j)].get_mpz_t());
      }
    }
    rem.pop_back();
  }
  return UPoly(std::move(rem));
}

Integer content(const UPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly primitive_part(const UPoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.lead() < 0) c = -c;
  if (c == 1) return p;
  return divexact(p, c);
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return primitive_part(b) * content(b);
  if (b.is_zero()) return primitive_part(a) * content(a);
  Integer cg;
  const Integer ca = content(a);
  const Integer cb = content(b);
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  UPoly x = primitive_part(a);
  UPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return UPoly(cg);
    UPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x) * cg;
}

namespace {

std::vector<Integer> positive_divisors(Integer m) {
  m = abs(m);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (unsigned long p = 2; p <= 1000000UL && Integer(p) * p <= m; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    factors.emplace_back(Integer(p), e);
  }
  if (m > 1) {
    if (m > Integer(1000000UL) * 1000000UL && mpz_probab_prime_p(m.get_mpz_t(), 30) == 0)
      throw Error("integer root scan: constant term has no small factorization");
    factors.emplace_back(m, 1);
  }
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<Integer> nonnegative_integer_roots(const UPoly& p) {
  if (p.is_zero()) throw InvalidInput("integer roots of the zero polynomial");
  std::vector<Integer> roots;
  int v = 0;
  while (p[v] == 0) ++v;
  if (v > 0) roots.emplace_back(0);
  if (p.degree() == v) return roots;
  for (const auto& d : positive_divisors(p[v])) {
    if (p(d) == 0) roots.push_back(d);
  }
  return roots;
}

std::string to_string(const UPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace franel
