#pragma once

#include <cstdint>
#include <ostream>

namespace bentcode {

// Exact element a + b*w of Z[w], w = exp(2*pi*i/3), with w^2 = -1 - w.
// Every ternary Walsh value lives here; i*sqrt(3) = w - w^2 = 1 + 2w.
struct Eisenstein {
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr Eisenstein() = default;
  constexpr Eisenstein(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

  // w^j for any integer j.
  static constexpr Eisenstein omega_pow(int j) {
    switch (((j % 3) + 3) % 3) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      default: return {-1, -1};
    }
  }

  constexpr Eisenstein times_omega() const { return {-b, a - b}; }
  constexpr Eisenstein times_omega_sq() const { return {b - a, -a}; }
  constexpr Eisenstein times_omega_pow(int j) const {
    switch (((j % 3) + 3) % 3) {
      case 0: return *this;
      case 1: return times_omega();
      default: return times_omega_sq();
    }
  }

  // Complex conjugation, the Galois automorphism w -> w^2.
  constexpr Eisenstein conjugate() const { return {a - b, -b}; }

  // |z|^2 = a^2 - ab + b^2.
  constexpr std::int64_t squared_norm() const { return a * a - a * b + b * b; }

  constexpr bool is_zero() const { return a == 0 && b == 0; }

  constexpr Eisenstein operator-() const { return {-a, -b}; }
  constexpr Eisenstein& operator+=(const Eisenstein& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  constexpr Eisenstein& operator-=(const Eisenstein& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend constexpr Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
  friend constexpr Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
  // (a+bw)(c+dw) = (ac - bd) + (ad + bc - bd)w
  friend constexpr Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend constexpr Eisenstein operator*(std::int64_t k, const Eisenstein& y) { return {k * y.a, k * y.b}; }
  friend constexpr bool operator==(const Eisenstein&, const Eisenstein&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Eisenstein& z) {
  return os << '(' << z.a << ',' << z.b << ')';
}

}  // namespace bentcode
