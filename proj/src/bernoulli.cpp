#include "franel/bernoulli.hpp"

#include "franel/errors.hpp"

namespace franel {

BernoulliTable bernoulli(int M) {
  if (M < 0) throw InvalidInput("bernoulli: M must be nonnegative");
  BernoulliTable t;
  t.values.reserve(static_cast<std::size_t>(M) + 1);
  t.values.emplace_back(1);
  for (int m = 1; m <= M; ++m) {
    Rational acc = 0;
    for (int i = 0; i < m; ++i) {
      acc += Rational(binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(i))) *
             t.values[static_cast<std::size_t>(i)];
    }
    t.values.push_back(-acc / (m + 1));
  }
  return t;
}

}  // namespace franel
