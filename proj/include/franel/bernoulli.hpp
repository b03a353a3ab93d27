#pragma once

#include <vector>

#include "franel/integer.hpp"

namespace franel {

/// Exact Bernoulli numbers B_0..B_M with B_1 = -1/2.
struct BernoulliTable {
  std::vector<Rational> values;

  const Rational& operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  int max_index() const { return static_cast<int>(values.size()) - 1; }
};

/// B_0..B_M from sum_{i=0}^{m} C(m+1, i) B_i = 0, m >= 1.
BernoulliTable bernoulli(int M);

}  // namespace franel
