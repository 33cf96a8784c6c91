#pragma once

#include <cstdint>
#include <vector>

#include "bentcode/analysis/function.hpp"
#include "bentcode/analysis/profile.hpp"

namespace bentcode {

// F(x, y, z) = f^(z)(x) + z.y on F_3^{m+2s}. Coordinates 0..m-1 hold x,
// m..m+s-1 hold y and m+s..m+2s-1 hold z, so index = x + 3^m y + 3^{m+s} z.
struct GmmfSpec {
  int m = 0;
  int s = 0;
  // family[z] for every z in F_3^s, by index; each of dimension m
  std::vector<TernaryFunction> family;

  int dim() const { return m + 2 * s; }
  void validate() const;
};

TernaryFunction gmmf_build(const GmmfSpec& spec);

struct GmmfPrediction {
  TernaryFunction dual;
  std::vector<std::uint32_t> b_plus;
  std::vector<std::uint32_t> b_minus;
  Regularity regularity = Regularity::Regular;
  // W+ / W-: indices z in F_3^s by component type
  std::vector<std::uint32_t> w_plus;
  std::vector<std::uint32_t> w_minus;
};

// Closed-form dual and B+- from the measured component profiles.
// Throws std::invalid_argument when a component is not weakly regular bent.
GmmfPrediction gmmf_predict(const GmmfSpec& spec);

// Embeds U subset F_3^s as the y block of F_3^m x U x F_3^s.
std::vector<std::uint32_t> gmmf_embed_y(int m, int s, const std::vector<std::uint32_t>& u);

}  // namespace bentcode
