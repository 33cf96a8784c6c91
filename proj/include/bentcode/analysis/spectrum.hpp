#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bentcode/analysis/function.hpp"
#include "bentcode/core/eisenstein.hpp"

namespace bentcode {

struct WalshSpectrum {
  int n = 0;
  std::vector<Eisenstein> values;

  // sum_a |f^(a)|^2; equals 3^{2n} for every function.
  std::int64_t parseval_sum() const;
};

// f^(alpha) = sum_x w^{f(x) - alpha.x}, straight from the definition.
Eisenstein walsh_point(const TernaryFunction& f, const Point& alpha);

// Radix-3 fast transform (OpenMP kernel).
WalshSpectrum walsh_spectrum(const TernaryFunction& f);
// Same transform through the serial kernel.
WalshSpectrum walsh_spectrum_serial(const TernaryFunction& f);
// 3^n calls of walsh_point; O(9^n), for cross-checks only.
WalshSpectrum walsh_spectrum_naive(const TernaryFunction& f);

// Every value has squared norm 3^n.
bool is_bent(const WalshSpectrum& s);

// s when every nonzero value has squared norm 3^{n+s}; nullopt otherwise.
std::optional<int> plateau_level(const WalshSpectrum& s);
std::optional<int> is_plateaued(const TernaryFunction& f);

// +-3^{n/2} w^j for n even, +-i 3^{n/2} w^j = +-3^{(n-1)/2}(w^{j+1} - w^{j+2}) for n odd.
Eisenstein signed_unit(int sign, Trit j, int n);

struct DecodedCoefficient {
  int sign;  // +1 / -1; means +-1 for n even and +-i for n odd
  Trit dual_value;
};

// Unique (sign, j) with w == signed_unit(sign, j, n).
// Throws std::invalid_argument if |w|^2 != 3^n, std::logic_error if nothing matches.
DecodedCoefficient decode_coefficient(const Eisenstein& w, int n);

}  // namespace bentcode
