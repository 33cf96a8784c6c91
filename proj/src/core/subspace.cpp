#include "bentcode/core/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace bentcode {
namespace {

using Row = std::vector<std::uint8_t>;

Row to_row(std::uint32_t index, int n) {
  Row r(n);
  decode_index(index, n, r);
  return r;
}

// In-place reduced row echelon form over F_3; returns pivot columns.
std::vector<int> row_reduce(std::vector<Row>& rows, int n) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    // 1 and 2 are their own inverses mod 3.
    const std::uint8_t inv = rows[r][col];
    for (auto& v : rows[r]) v = static_cast<std::uint8_t>((v * inv) % 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const std::uint8_t f = rows[i][col];
      for (int c = 0; c < n; ++c) rows[i][c] = static_cast<std::uint8_t>((rows[i][c] + 3 * 3 - f * rows[r][c]) % 3);
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

Subspace::Subspace(int n) : n_(n) {
  if (n < 0 || n > kHardMaxDimension) throw std::invalid_argument("Subspace: dimension out of range");
}

Subspace::Subspace(int n, std::span<const std::uint32_t> generators) : Subspace(n) {
  rows_.reserve(generators.size());
  for (auto g : generators) {
    if (g >= pow3(n)) throw std::invalid_argument("Subspace: generator out of range");
    if (g != 0) rows_.push_back(to_row(g, n));
  }
  pivots_ = row_reduce(rows_, n);
  for (const auto& r : rows_) basis_.emplace_back(encode_digits(r), n);
}

Subspace Subspace::full(int n) {
  std::vector<std::uint32_t> e;
  for (int i = 0; i < n; ++i) e.push_back(static_cast<std::uint32_t>(pow3(i)));
  return Subspace(n, e);
}

bool Subspace::contains(const Point& p) const {
  if (p.dim() != n_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  return contains(p.index());
}

bool Subspace::contains(std::uint32_t index) const {
  Row v = to_row(index, n_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint8_t c = v[pivots_[k]];
    if (c == 0) continue;
    for (int j = 0; j < n_; ++j) v[j] = static_cast<std::uint8_t>((v[j] + 3 * 3 - c * rows_[k][j]) % 3);
  }
  return std::all_of(v.begin(), v.end(), [](std::uint8_t d) { return d == 0; });
}

std::vector<std::uint32_t> Subspace::members() const {
  const int r = dim();
  const std::uint64_t count = pow3(r);
  std::vector<std::uint32_t> out;
  out.reserve(count);
  Row coeff(r), acc(n_);
  for (std::uint64_t c = 0; c < count; ++c) {
    decode_index(static_cast<std::uint32_t>(c), r, coeff);
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < r; ++k) {
      if (coeff[k] == 0) continue;
      for (int j = 0; j < n_; ++j) acc[j] = static_cast<std::uint8_t>((acc[j] + coeff[k] * rows_[k][j]) % 3);
    }
    out.push_back(encode_digits(acc));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpanResult span(int n, std::span<const std::uint32_t> points) {
  Subspace s(n, points);
  if (points.empty()) return {std::move(s), false};
  std::vector<std::uint32_t> input(points.begin(), points.end());
  std::sort(input.begin(), input.end());
  input.erase(std::unique(input.begin(), input.end()), input.end());
  bool is_sub = input.size() == pow3(s.dim()) && input == s.members();
  return {std::move(s), is_sub};
}

SpanResult span(std::span<const Point> points) {
  if (points.empty()) return span(0, std::span<const std::uint32_t>{});
  const int n = points.front().dim();
  std::vector<std::uint32_t> idx;
  idx.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != n) throw std::invalid_argument("span: dimension mismatch");
    idx.push_back(p.index());
  }
  return span(n, idx);
}

int rank(int n, std::span<const std::uint32_t> points) { return Subspace(n, points).dim(); }

bool is_nondegenerate(const Subspace& v) {
  const int n = v.ambient_dim();
  for (auto x : v.members()) {
    if (x == 0) continue;
    bool orthogonal_to_all = true;
    for (const auto& b : v.basis()) {
      if (dot_index(x, b.index(), n) != 0) {
        orthogonal_to_all = false;
        break;
      }
    }
    if (orthogonal_to_all) return false;
  }
  return true;
}

Subspace orthogonal_complement(const Subspace& v) {
  const int n = v.ambient_dim();
  std::vector<Row> rows;
  for (const auto& b : v.basis()) rows.push_back(to_row(b.index(), n));
  auto pivots = row_reduce(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::uint32_t> gens;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Row x(n, 0);
    x[f] = 1;
    for (std::size_t k = 0; k < rows.size(); ++k) x[pivots[k]] = static_cast<std::uint8_t>((3 - rows[k][f]) % 3);
    gens.push_back(encode_digits(x));
  }
  return Subspace(n, gens);
}

}  // namespace bentcode
