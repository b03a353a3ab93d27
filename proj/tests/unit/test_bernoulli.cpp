#include <doctest.h>

#include "franel/bernoulli.hpp"
#include "franel/errors.hpp"

using namespace franel;

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2 and agrees elsewhere.
std::vector<Rational> akiyama_tanigawa(int M) {
  std::vector<Rational> out;
  std::vector<Rational> a(static_cast<std::size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) {
    a[static_cast<std::size_t>(m)] = ratio(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] = Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
    out.push_back(a[0]);
  }
  return out;
}

}  // namespace

TEST_CASE("bernoulli: examples") {
  const BernoulliTable b = bernoulli(12);
  CHECK(b[0] == 1);
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[12] == Rational(-691, 2730));
}

TEST_CASE("bernoulli: odd indices from 3 vanish") {
  const BernoulliTable b = bernoulli(40);
  for (int i = 3; i <= 40; i += 2) CHECK(b[i] == 0);
}

TEST_CASE("bernoulli: defining recurrence holds") {
  const int M = 40;
  const BernoulliTable b = bernoulli(M);
  for (int m = 1; m <= M; ++m) {
    Rational acc = 0;
    for (int i = 0; i <= m; ++i) {
      acc += Rational(binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(i))) * b[i];
    }
    CHECK(acc == 0);
  }
}

TEST_CASE("bernoulli: agrees with the Akiyama-Tanigawa algorithm") {
  const int M = 30;
  const BernoulliTable b = bernoulli(M);
  const auto ref = akiyama_tanigawa(M);
  for (int i = 0; i <= M; ++i) {
    if (i == 1) {
      CHECK(b[i] == -ref[1]);
    } else {
      CHECK(b[i] == ref[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("bernoulli: negative size is rejected") { CHECK_THROWS_AS(bernoulli(-1), InvalidInput); }
