#include "franel/linsolve.hpp"

#include <tuple>

#include "franel/errors.hpp"

namespace franel {

namespace {

// (a*b - c*d) / e with the division known to be exact.
UPoly cross_divexact(const UPoly& a, const UPoly& b, const UPoly& c, const UPoly& d, const UPoly& e) {
  UPoly t = a * b;
  if (!c.is_zero() && !d.is_zero()) t -= c * d;
  if (t.is_zero()) return t;
  if (e.degree() == 0) {
    if (e.lead() == 1) return t;
    std::vector<Integer> q = t.coeffs();
    for (auto& x : q) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), e.lead().get_mpz_t());
    return UPoly(std::move(q));
  }
  std::vector<Integer> rem = t.coeffs();
  const int de = e.degree();
  const int dt = t.degree();
  if (dt < de) throw Error("fraction-free elimination: inexact division");
  const auto& ec = e.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(dt - de + 1));
  for (int i = dt - de; i >= 0; --i) {
    Integer& top = rem[static_cast<std::size_t>(i + de)];
    if (top == 0) continue;
    Integer& qi = q[static_cast<std::size_t>(i)];
    mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), e.lead().get_mpz_t());
    for (int j = 0; j < de; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), qi.get_mpz_t(),
                 ec[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  return UPoly(std::move(q));
}

}  // namespace

NullspaceResult nullspace(PolyMatrix m) {
  NullspaceResult out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (const auto& r : m) {
    if (r.size() != cols) throw InvalidInput("ragged matrix");
  }

  UPoly prev(1L);
  std::size_t row = 0;
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    // Pivot: lowest degree, then fewest bits.
    std::size_t best = rows;
    std::tuple<int, std::size_t> best_key{};
    for (std::size_t i = row; i < rows; ++i) {
      const UPoly& e = m[i][col];
      if (e.is_zero()) continue;
      std::tuple<int, std::size_t> key{e.degree(), e.max_bits()};
      if (best == rows || key < best_key) {
        best = i;
        best_key = key;
      }
    }
    if (best == rows) continue;
    std::swap(m[row], m[best]);
    const UPoly pivot = m[row][col];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row) continue;
      const UPoly factor = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == col) continue;
        const UPoly& pj = m[row][j];
        UPoly& x = m[i][j];
        if (x.is_zero() && (pj.is_zero() || factor.is_zero())) continue;
        x = cross_divexact(pivot, x, factor, pj, prev);
      }
      m[i][col] = UPoly();
    }
    prev = pivot;
    is_pivot[col] = 1;
    out.pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  out.rank = static_cast<int>(row);

  // All pivots now equal `prev`; read off one kernel vector per free column.
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out.free_cols.push_back(static_cast<int>(f));
    std::vector<UPoly> v(cols);
    v[f] = prev;
    for (std::size_t i = 0; i < out.pivot_cols.size(); ++i) {
      v[static_cast<std::size_t>(out.pivot_cols[i])] = -m[i][f];
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace franel
