#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bentcode {

// Largest dimension addressable with 32-bit point indices.
inline constexpr int kHardMaxDimension = 16;
// Default guard on the ambient dimension: 3^12 = 531441 points.
inline constexpr int kDefaultMaxDimension = 12;

constexpr std::uint64_t pow3(int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

// Throws std::invalid_argument unless 0 <= n <= min(max_n, kHardMaxDimension).
void require_dimension(int n, int max_n = kDefaultMaxDimension);

// An element of F_3.
class Trit {
 public:
  constexpr Trit() = default;
  constexpr explicit Trit(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  constexpr int value() const noexcept { return v_; }

  friend constexpr Trit operator+(Trit a, Trit b) { return Trit(a.v_ + b.v_); }
  friend constexpr Trit operator-(Trit a, Trit b) { return Trit(a.v_ + 3 - b.v_); }
  friend constexpr Trit operator*(Trit a, Trit b) { return Trit(a.v_ * b.v_); }
  constexpr Trit operator-() const { return Trit(3 - v_); }
  friend constexpr bool operator==(Trit, Trit) = default;

 private:
  std::uint8_t v_ = 0;
};

// A vector of F_3^n, stored as its little-endian base-3 index:
// coordinate i is floor(index / 3^i) mod 3.
class Point {
 public:
  Point(std::uint32_t index, int n);
  static Point zero(int n) { return Point(0, n); }
  static Point from_coords(std::span<const int> coords);

  std::uint32_t index() const noexcept { return index_; }
  int dim() const noexcept { return n_; }
  Trit coord(int i) const;
  std::vector<Trit> coords() const;

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;
  Point operator-() const;
  Point scaled(Trit c) const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::uint32_t index_;
  int n_;
};

// Standard dot product; throws std::invalid_argument on dimension mismatch.
Trit dot(const Point& u, const Point& v);

// Legendre symbol (a/3): 0, 1 for the nonzero square 1, -1 for 2.
int legendre(Trit a);

std::string to_string(const Point& p);

// Index-level helpers for hot loops.
void decode_index(std::uint32_t index, int n, std::span<std::uint8_t> digits);
std::uint32_t encode_digits(std::span<const std::uint8_t> digits);
std::uint32_t negate_index(std::uint32_t index, int n);
std::uint32_t add_index(std::uint32_t a, std::uint32_t b, int n);
int dot_index(std::uint32_t a, std::uint32_t b, int n);

// Precomputed digits of every point of F_3^n.
class DigitTable {
 public:
  explicit DigitTable(int n);

  int dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }
  std::span<const std::uint8_t> digits(std::uint32_t index) const {
    return {digits_.data() + static_cast<std::size_t>(index) * n_, static_cast<std::size_t>(n_)};
  }
  int dot(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t negate(std::uint32_t index) const { return negation_[index]; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;

 private:
  int n_;
  std::size_t size_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::uint32_t> negation_;
};

}  // namespace bentcode
