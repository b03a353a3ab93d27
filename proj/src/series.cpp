#include "franel/series.hpp"

#include <sstream>

#include "franel/errors.hpp"

namespace franel {

namespace {

void check_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) throw InvalidInput("series truncation orders differ");
}

}  // namespace

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw InvalidInput("negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw InvalidInput("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries TruncSeries::constant(const Rational& c, int order) {
  TruncSeries f(order);
  f.coeffs_[0] = c;
  return f;
}

TruncSeries TruncSeries::linear(const Rational& a, int order) {
  TruncSeries f = constant(1, order);
  if (order >= 1) f.coeffs_[1] = a;
  return f;
}

TruncSeries& TruncSeries::mul_linear(const Rational& a) {
  for (int i = order_; i >= 1; --i) {
    coeffs_[static_cast<std::size_t>(i)] += a * coeffs_[static_cast<std::size_t>(i - 1)];
  }
  return *this;
}

TruncSeries& TruncSeries::div_linear(const Rational& a) {
  // g = f / (1 + a t)  <=>  g_i = f_i - a g_{i-1}
  for (int i = 1; i <= order_; ++i) {
    coeffs_[static_cast<std::size_t>(i)] -= a * coeffs_[static_cast<std::size_t>(i - 1)];
  }
  return *this;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_same_order(a, b);
  TruncSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      r.coeffs_[static_cast<std::size_t>(i + j)] +=
          a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

TruncSeries series_inv(const TruncSeries& f) {
  if (f[0] == 0) throw NonInvertible("series with zero constant term is not invertible");
  const int T = f.order();
  std::vector<Rational> g(static_cast<std::size_t>(T) + 1);
  const Rational inv0 = 1 / f[0];
  g[0] = inv0;
  for (int i = 1; i <= T; ++i) {
    Rational acc = 0;
    for (int j = 1; j <= i; ++j) acc += f[j] * g[static_cast<std::size_t>(i - j)];
    g[static_cast<std::size_t>(i)] = -acc * inv0;
  }
  return TruncSeries(std::move(g), T);
}

TruncSeries series_pow(const TruncSeries& f, unsigned s) {
  TruncSeries result = TruncSeries::constant(1, f.order());
  TruncSeries base = f;
  while (s > 0) {
    if (s & 1U) result = result * base;
    s >>= 1U;
    if (s > 0) base = base * base;
  }
  return result;
}

TruncSeries sinc_series(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  Rational term = 1;  // (-1)^j / (2j+1)!
  for (int i = 0; i <= order; i += 2) {
    c[static_cast<std::size_t>(i)] = term;
    term /= -Rational((i + 2) * (i + 3));
  }
  return TruncSeries(std::move(c), order);
}

std::string to_string(const TruncSeries& f) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= f.order(); ++i) {
    if (f[i] == 0) continue;
    if (!first) os << " + ";
    os << f[i].get_str();
    if (i > 0) os << "*t";
    if (i > 1) os << '^' << i;
    first = false;
  }
  if (first) os << '0';
  os << " + O(t^" << f.order() + 1 << ')';
  return os.str();
}

}  // namespace franel
