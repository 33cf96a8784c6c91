#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bentcode/core/arith.hpp"

namespace bentcode {

// f: F_3^n -> F_3 as a dense truth table indexed by little-endian base-3 point index.
class TernaryFunction {
 public:
  TernaryFunction() = default;
  // Table length must be 3^n and every entry in {0,1,2}.
  TernaryFunction(int n, std::vector<std::uint8_t> table);

  template <typename Eval>
  static TernaryFunction tabulate(int n, Eval&& eval) {
    std::vector<std::uint8_t> t(pow3(n));
    for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = static_cast<std::uint8_t>(Trit(eval(x)).value());
    return TernaryFunction(n, std::move(t));
  }

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  std::span<const std::uint8_t> table() const noexcept { return table_; }

  int operator()(std::uint32_t index) const { return table_[index]; }
  Trit at(const Point& p) const;

  // f(x) = f(-x) for every x.
  bool is_even() const;
  // x -> -f(x)
  TernaryFunction negated() const;

  friend bool operator==(const TernaryFunction&, const TernaryFunction&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> table_{0};
};

}  // namespace bentcode
