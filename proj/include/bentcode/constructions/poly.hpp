#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bentcode/analysis/function.hpp"

namespace bentcode {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct Monomial {
  int coeff = 0;           // reduced mod 3
  std::vector<int> exps;   // one exponent per variable
};

// A multivariate polynomial over F_3 in x1..xn.
struct PolyExpr {
  int n = 0;
  std::vector<Monomial> terms;
};

// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*, term := factor ('*'? factor)*,
// factor := integer | x<k> ['^' integer] | x_<k> ['^' integer]. Whitespace is ignored.
PolyExpr parse_poly(std::string_view text, int n);

// Pointwise evaluation over F_3^n (0^0 = 1).
TernaryFunction eval_poly(const PolyExpr& e);

}  // namespace bentcode
