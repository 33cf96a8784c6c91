#include "bentcode/constructions/quadratic.hpp"

#include <stdexcept>

namespace bentcode {
namespace {

void validate(const QuadraticForm& q) {
  if (q.d.empty()) throw std::invalid_argument("quadratic form needs at least one coefficient");
  require_dimension(q.dim(), kHardMaxDimension);
  for (int d : q.d) {
    if (Trit(d).value() == 0) throw std::invalid_argument("quadratic form coefficient is 0 mod 3");
  }
}

}  // namespace

int QuadraticForm::eta_delta() const {
  Trit prod(1);
  for (int v : d) prod = prod * Trit(v);
  return legendre(prod);
}

TernaryFunction quadratic_function(const QuadraticForm& q) {
  validate(q);
  const int m = q.dim();
  std::vector<std::uint8_t> digits(m);
  return TernaryFunction::tabulate(m, [&](std::uint32_t x) {
    decode_index(x, m, digits);
    int acc = q.c;
    for (int i = 0; i < m; ++i) acc += q.d[i] * digits[i] * digits[i];
    return acc;
  });
}

BentType quadratic_type(const QuadraticForm& q) {
  validate(q);
  const int im = (q.dim() % 4 <= 1) ? 1 : -1;
  return q.eta_delta() * im > 0 ? BentType::Plus : BentType::Minus;
}

QuadraticForm quadratic_dual(const QuadraticForm& q) {
  QuadraticForm out{{}, Trit(q.c).value()};
  for (int v : q.d) out.d.push_back((-Trit(v)).value());
  return out;
}

}  // namespace bentcode
