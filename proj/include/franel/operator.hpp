#pragma once

#include <string>
#include <vector>

#include "franel/upoly.hpp"

namespace franel {

/// P(n, N) = sum_{i=0}^{r} c_i(n) N^i with N the forward shift in n.
///
/// Construction only trims vanishing top coefficients; normalize() brings
/// the operator into canonical form (primitive coefficient list, positive
/// leading coefficient of c_r).
class RecurrenceOperator {
 public:
  /// Throws InvalidInput for the zero operator.
  explicit RecurrenceOperator(std::vector<UPoly> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<UPoly>& coeffs() const { return coeffs_; }
  const UPoly& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  /// Largest degree in n among the coefficients.
  int coeff_degree() const;
  bool is_normalized() const;

  friend RecurrenceOperator operator+(const RecurrenceOperator& a, const RecurrenceOperator& b);
  friend bool operator==(const RecurrenceOperator& a, const RecurrenceOperator& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<UPoly> coeffs_;
};

RecurrenceOperator normalize(const RecurrenceOperator& p);

std::string to_string(const RecurrenceOperator& p);

}  // namespace franel
