#include <doctest.h>

#include "franel/linsolve.hpp"
#include "helpers.hpp"

using namespace franel;

namespace {

// Rank over Q of the matrix specialized at n = x, by plain elimination.
int rank_at(const PolyMatrix& m, const Integer& x) {
  if (m.empty()) return 0;
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (const auto& e : row) r.emplace_back(e(x));
    a.push_back(std::move(r));
  }
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[static_cast<std::size_t>(rank)]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rank) || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[static_cast<std::size_t>(rank)][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[static_cast<std::size_t>(rank)][j];
    }
    ++rank;
  }
  return rank;
}

bool annihilates(const PolyMatrix& m, const std::vector<UPoly>& v) {
  for (const auto& row : m) {
    UPoly acc;
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("linsolve: small kernel") {
  const UPoly x = UPoly::variable();
  // [n, -1] has kernel spanned by (1, n).
  const NullspaceResult r = nullspace({{x, UPoly(-1L)}});
  CHECK(r.rank == 1);
  REQUIRE(r.basis.size() == 1);
  CHECK(annihilates({{x, UPoly(-1L)}}, r.basis[0]));
}

TEST_CASE("linsolve: full rank has trivial kernel") {
  const UPoly x = UPoly::variable();
  const PolyMatrix m{{x, UPoly(1L)}, {UPoly(1L), x}};
  const NullspaceResult r = nullspace(m);
  CHECK(r.rank == 2);
  CHECK(r.basis.empty());
}

TEST_CASE("linsolve: zero matrix") {
  const NullspaceResult r = nullspace({{UPoly(), UPoly()}});
  CHECK(r.rank == 0);
  CHECK(r.basis.size() == 2);
}

TEST_CASE("linsolve: random matrices with dependent rows and columns") {
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = static_cast<int>(testutil::uniform(1, 5));
    const int cols = static_cast<int>(testutil::uniform(1, 6));
    PolyMatrix m(static_cast<std::size_t>(rows), std::vector<UPoly>(static_cast<std::size_t>(cols)));
    for (auto& row : m)
      for (auto& e : row) e = testutil::random_upoly(2, 5);
    // Plant a dependent row.
    if (rows >= 2) {
      const UPoly f = testutil::random_upoly(1, 3);
      for (int j = 0; j < cols; ++j) m[static_cast<std::size_t>(rows - 1)][static_cast<std::size_t>(j)] = f * m[0][static_cast<std::size_t>(j)];
    }
    const NullspaceResult r = nullspace(m);
    CHECK(r.rank + static_cast<int>(r.basis.size()) == cols);
    CHECK(r.rank == rank_at(m, Integer(1000003)));
    for (const auto& v : r.basis) {
      CHECK(annihilates(m, v));
      bool nonzero = false;
      for (const auto& e : v) nonzero = nonzero || !e.is_zero();
      CHECK(nonzero);
    }
  }
}
