#pragma once

#include <vector>

#include "franel/upoly.hpp"

namespace franel {

/// Dense matrix over Z[n], row major.
using PolyMatrix = std::vector<std::vector<UPoly>>;

struct NullspaceResult {
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<int> free_cols;
  /// One vector per free column, in free-column order; entries lie in Z[n]
  /// and are not reduced by their common content.
  std::vector<std::vector<UPoly>> basis;
};

/// Kernel of a matrix over Z[n] by fraction-free Gauss-Jordan elimination.
/// Every division in the elimination is exact, so entries stay polynomial.
NullspaceResult nullspace(PolyMatrix m);

}  // namespace franel
