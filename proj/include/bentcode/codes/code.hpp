#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bentcode/core/arith.hpp"

namespace bentcode {

// Nonzero points x_1 < ... < x_k of F_3^n; zero and duplicates are dropped on construction.
class DefiningSet {
 public:
  DefiningSet(int n, std::vector<std::uint32_t> points);

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::uint32_t>& points() const noexcept { return points_; }
  // whether the input contained the zero vector
  bool had_zero() const noexcept { return had_zero_; }

 private:
  int n_;
  std::vector<std::uint32_t> points_;
  bool had_zero_ = false;
};

using WeightDistribution = std::map<std::uint64_t, std::uint64_t>;

// C_S = {(u.x_1, ..., u.x_k) : u in F_3^n}.
struct LinearCode {
  std::size_t length = 0;
  int dimension = 0;
  std::uint64_t min_distance = 0;
  // weight -> number of codewords, including weight 0
  WeightDistribution distribution;
  // wt(c_u) for every message u
  std::vector<std::uint32_t> message_weights;
};

// Counts weights over all 3^n messages and divides by 3^{n - rank}.
// Throws std::invalid_argument on an empty set, std::logic_error if the division is inexact.
LinearCode build_code(const DefiningSet& s);
LinearCode build_code_serial(const DefiningSet& s);

// #{x in S : u.x != 0}
std::uint64_t weight_of(const Point& u, const DefiningSet& s);
// (2k - (chi + conj(chi))) / 3 with chi = sum_{x in S} w^{u.x}; exact.
std::uint64_t weight_by_character_sum(const Point& u, const DefiningSet& s);

// "1+32y^54+162y^66+48y^72"
std::string enumerator_string(const WeightDistribution& d);

}  // namespace bentcode
