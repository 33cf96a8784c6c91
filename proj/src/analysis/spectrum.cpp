#include "bentcode/analysis/spectrum.hpp"

#include <stdexcept>

#include "bentcode/kernels/kernels.hpp"

namespace bentcode {
namespace {

std::vector<Eisenstein> phase_vector(const TernaryFunction& f) {
  std::vector<Eisenstein> v(f.size());
  for (std::uint32_t x = 0; x < v.size(); ++x) v[x] = Eisenstein::omega_pow(f(x));
  return v;
}

std::int64_t ipow3(int e) { return static_cast<std::int64_t>(pow3(e)); }

}  // namespace

std::int64_t WalshSpectrum::parseval_sum() const {
  std::int64_t total = 0;
  for (const auto& v : values) total += v.squared_norm();
  return total;
}

Eisenstein walsh_point(const TernaryFunction& f, const Point& alpha) {
  if (alpha.dim() != f.dim()) throw std::invalid_argument("walsh_point: dimension mismatch");
  std::int64_t count[3] = {0, 0, 0};
  const int n = f.dim();
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    ++count[(f(x) + 3 - dot_index(alpha.index(), x, n)) % 3];
  }
  // c0 + c1 w + c2 w^2 with w^2 = -1 - w
  return {count[0] - count[2], count[1] - count[2]};
}

WalshSpectrum walsh_spectrum(const TernaryFunction& f) {
  WalshSpectrum s{f.dim(), phase_vector(f)};
  kernels::character_transform(s.values, f.dim());
  return s;
}

WalshSpectrum walsh_spectrum_serial(const TernaryFunction& f) {
  WalshSpectrum s{f.dim(), phase_vector(f)};
  kernels::character_transform_serial(s.values, f.dim());
  return s;
}

WalshSpectrum walsh_spectrum_naive(const TernaryFunction& f) {
  WalshSpectrum s{f.dim(), std::vector<Eisenstein>(f.size())};
  for (std::uint32_t a = 0; a < f.size(); ++a) s.values[a] = walsh_point(f, Point(a, f.dim()));
  return s;
}

bool is_bent(const WalshSpectrum& s) {
  const std::int64_t target = ipow3(s.n);
  for (const auto& v : s.values) {
    if (v.squared_norm() != target) return false;
  }
  return true;
}

std::optional<int> plateau_level(const WalshSpectrum& s) {
  std::int64_t level = 0;
  for (const auto& v : s.values) {
    const auto q = v.squared_norm();
    if (q == 0) continue;
    if (level == 0) {
      level = q;
    } else if (q != level) {
      return std::nullopt;
    }
  }
  if (level == 0) throw std::logic_error("plateau_level: all-zero spectrum contradicts Parseval");
  int e = 0;
  std::int64_t p = 1;
  while (p < level) {
    p *= 3;
    ++e;
  }
  if (p != level || e < s.n) return std::nullopt;
  return e - s.n;
}

std::optional<int> is_plateaued(const TernaryFunction& f) { return plateau_level(walsh_spectrum(f)); }

Eisenstein signed_unit(int sign, Trit j, int n) {
  if (n % 2 == 0) return (sign * ipow3(n / 2)) * Eisenstein::omega_pow(j.value());
  const Eisenstein i_sqrt3 = Eisenstein::omega_pow(1) - Eisenstein::omega_pow(2);
  return (sign * ipow3((n - 1) / 2)) * i_sqrt3.times_omega_pow(j.value());
}

DecodedCoefficient decode_coefficient(const Eisenstein& w, int n) {
  if (w.squared_norm() != ipow3(n)) throw std::invalid_argument("decode_coefficient: |w|^2 != 3^n");
  for (int sign : {1, -1}) {
    for (int j = 0; j < 3; ++j) {
      if (signed_unit(sign, Trit(j), n) == w) return {sign, Trit(j)};
    }
  }
  throw std::logic_error("decode_coefficient: norm matches but no signed unit does");
}

}  // namespace bentcode
