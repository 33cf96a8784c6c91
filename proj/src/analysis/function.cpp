#include "bentcode/analysis/function.hpp"

#include <stdexcept>

namespace bentcode {

TernaryFunction::TernaryFunction(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
  if (n < 0 || n > kHardMaxDimension) throw std::invalid_argument("TernaryFunction: dimension out of range");
  if (table_.size() != pow3(n)) throw std::invalid_argument("TernaryFunction: table length must be 3^n");
  for (auto v : table_) {
    if (v > 2) throw std::invalid_argument("TernaryFunction: table entries must be in {0,1,2}");
  }
}

Trit TernaryFunction::at(const Point& p) const {
  if (p.dim() != n_) throw std::invalid_argument("TernaryFunction::at: dimension mismatch");
  return Trit(table_[p.index()]);
}

bool TernaryFunction::is_even() const {
  for (std::uint32_t x = 0; x < table_.size(); ++x) {
    if (table_[x] != table_[negate_index(x, n_)]) return false;
  }
  return true;
}

TernaryFunction TernaryFunction::negated() const {
  std::vector<std::uint8_t> t(table_.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = static_cast<std::uint8_t>((3 - table_[x]) % 3);
  return TernaryFunction(n_, std::move(t));
}

}  // namespace bentcode
