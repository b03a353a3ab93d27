#pragma once

#include <random>
#include <vector>

#include "franel/bipoly.hpp"
#include "franel/integer.hpp"
#include "franel/series.hpp"
#include "franel/upoly.hpp"

namespace testutil {

using franel::BiPoly;
using franel::Integer;
using franel::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational small_rational(long bound = 9) {
  const long num = uniform(-bound, bound);
  const long den = uniform(1, bound);
  return franel::ratio(num, den);
}

inline franel::UPoly random_upoly(int max_deg, long bound) {
  std::vector<Integer> c;
  const int d = static_cast<int>(uniform(0, max_deg));
  for (int i = 0; i <= d; ++i) c.emplace_back(uniform(-bound, bound));
  return franel::UPoly(std::move(c));
}

/// Random polynomial with total degree <= max_deg, possibly zero.
inline BiPoly random_bipoly(int max_deg, long bound, int terms = 4) {
  BiPoly p;
  for (int t = 0; t < terms; ++t) {
    const int dn = static_cast<int>(uniform(0, max_deg));
    const int dk = static_cast<int>(uniform(0, max_deg - dn));
    p += BiPoly::monomial(uniform(-bound, bound), dn, dk);
  }
  return p;
}

inline BiPoly random_nonzero_bipoly(int max_deg, long bound, int terms = 4) {
  for (;;) {
    BiPoly p = random_bipoly(max_deg, bound, terms);
    if (!p.is_zero()) return p;
  }
}

inline franel::TruncSeries random_series(int order, long bound) {
  std::vector<Rational> c;
  for (int i = 0; i <= order; ++i) c.push_back(small_rational(bound));
  return franel::TruncSeries(std::move(c), order);
}

}  // namespace testutil
