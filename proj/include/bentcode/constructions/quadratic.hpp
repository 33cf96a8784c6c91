#pragma once

#include <vector>

#include "bentcode/analysis/function.hpp"
#include "bentcode/analysis/profile.hpp"

namespace bentcode {

// d_1 x_1^2 + ... + d_m x_m^2 + c over F_3; every d_i nonzero.
struct QuadraticForm {
  std::vector<int> d;
  int c = 0;

  int dim() const { return static_cast<int>(d.size()); }
  // legendre(prod d_i)
  int eta_delta() const;
};

// Throws std::invalid_argument on a zero (mod 3) coefficient.
TernaryFunction quadratic_function(const QuadraticForm& q);

// Sign of f^(0): eta(Delta) i^m 3^{m/2}, folded to +/- as i^m is +-1 or +-i.
BentType quadratic_type(const QuadraticForm& q);

// -d_i x_i^2 + c, the closed-form dual.
QuadraticForm quadratic_dual(const QuadraticForm& q);

}  // namespace bentcode
