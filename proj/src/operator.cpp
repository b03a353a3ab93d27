#include "franel/operator.hpp"

#include <algorithm>
#include <sstream>

#include "franel/errors.hpp"

namespace franel {

RecurrenceOperator::RecurrenceOperator(std::vector<UPoly> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) throw InvalidInput("the zero operator is not a recurrence operator");
}

int RecurrenceOperator::coeff_degree() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

bool RecurrenceOperator::is_normalized() const { return normalize(*this) == *this; }

RecurrenceOperator operator+(const RecurrenceOperator& a, const RecurrenceOperator& b) {
  std::vector<UPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RecurrenceOperator(std::move(c));
}

RecurrenceOperator normalize(const RecurrenceOperator& p) {
  UPoly g;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  if (p.coeffs().back().lead() < 0) g = -g;
  std::vector<UPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(divexact(c, g));
  return RecurrenceOperator(std::move(out));
}

std::string to_string(const RecurrenceOperator& p) {
  std::ostringstream os;
  bool first = true;
  for (int i = p.order(); i >= 0; --i) {
    if (p[i].is_zero()) continue;
    if (!first) os << " + ";
    os << '(' << to_string(p[i]) << ')';
    if (i > 0) os << "*N";
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace franel
