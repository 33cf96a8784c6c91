#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bentcode/core/arith.hpp"

namespace bentcode {

// A linear subspace of F_3^n held by a reduced row-echelon basis.
class Subspace {
 public:
  // The zero subspace of F_3^n.
  explicit Subspace(int n);
  // Span of arbitrary generators; dependent rows are eliminated.
  Subspace(int n, std::span<const std::uint32_t> generators);

  static Subspace full(int n);

  int ambient_dim() const noexcept { return n_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Point>& basis() const noexcept { return basis_; }

  bool contains(const Point& p) const;
  bool contains(std::uint32_t index) const;
  // All 3^dim members, ascending by index.
  std::vector<std::uint32_t> members() const;

 private:
  int n_;
  std::vector<Point> basis_;
  std::vector<std::vector<std::uint8_t>> rows_;
  std::vector<int> pivots_;
};

struct SpanResult {
  Subspace space;
  // True iff the input set (deduplicated) equals its own span.
  bool is_subspace;
};

SpanResult span(int n, std::span<const std::uint32_t> points);
SpanResult span(std::span<const Point> points);

// Rank over F_3 of the matrix whose rows are the given points.
int rank(int n, std::span<const std::uint32_t> points);

// {x in V : x.y = 0 for all y in V} == {0}, decided by enumerating V.
bool is_nondegenerate(const Subspace& v);

// {x : x.b = 0 for every basis vector b of V}, via the null space of the basis.
Subspace orthogonal_complement(const Subspace& v);

}  // namespace bentcode
