#include "bentcode/constructions/gmmf.hpp"

#include <algorithm>
#include <stdexcept>

namespace bentcode {

void GmmfSpec::validate() const {
  if (m < 1 || s < 1) throw std::invalid_argument("gmmf: m and s must be positive");
  require_dimension(dim(), kHardMaxDimension);
  if (family.size() != pow3(s)) throw std::invalid_argument("gmmf: family needs 3^s components");
  for (const auto& f : family) {
    if (f.dim() != m) throw std::invalid_argument("gmmf: component dimension != m");
  }
}

TernaryFunction gmmf_build(const GmmfSpec& spec) {
  spec.validate();
  const std::uint32_t px = static_cast<std::uint32_t>(pow3(spec.m));
  const std::uint32_t py = static_cast<std::uint32_t>(pow3(spec.s));
  std::vector<std::uint8_t> table(static_cast<std::size_t>(px) * py * py);
  for (std::uint32_t z = 0; z < py; ++z) {
    const auto& comp = spec.family[z];
    for (std::uint32_t y = 0; y < py; ++y) {
      const int zy = dot_index(z, y, spec.s);
      const std::size_t base = (static_cast<std::size_t>(z) * py + y) * px;
      for (std::uint32_t x = 0; x < px; ++x) table[base + x] = static_cast<std::uint8_t>((comp(x) + zy) % 3);
    }
  }
  return TernaryFunction(spec.dim(), std::move(table));
}

std::vector<std::uint32_t> gmmf_embed_y(int m, int s, const std::vector<std::uint32_t>& u) {
  const std::uint32_t px = static_cast<std::uint32_t>(pow3(m));
  const std::uint32_t py = static_cast<std::uint32_t>(pow3(s));
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(px) * u.size() * py);
  for (std::uint32_t z = 0; z < py; ++z) {
    for (auto y : u) {
      for (std::uint32_t x = 0; x < px; ++x) out.push_back((z * py + y) * px + x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GmmfPrediction gmmf_predict(const GmmfSpec& spec) {
  spec.validate();
  GmmfPrediction out;
  std::vector<BentProfile> comps;
  comps.reserve(spec.family.size());
  for (std::uint32_t z = 0; z < spec.family.size(); ++z) {
    BentProfile p;
    try {
      p = bent_profile(spec.family[z]);
    } catch (const NotBent&) {
      throw std::invalid_argument("gmmf_predict: component " + std::to_string(z) + " is not bent");
    }
    if (p.regularity == Regularity::NonWeaklyRegular) {
      throw std::invalid_argument("gmmf_predict: component " + std::to_string(z) + " is not weakly regular");
    }
    (p.type == BentType::Plus ? out.w_plus : out.w_minus).push_back(z);
    comps.push_back(std::move(p));
  }
  const int m = spec.m, s = spec.s;
  const std::uint32_t px = static_cast<std::uint32_t>(pow3(m));
  const std::uint32_t py = static_cast<std::uint32_t>(pow3(s));
  // F*(a, b, c) = f^(b)*(a) - b.c
  std::vector<std::uint8_t> dual(static_cast<std::size_t>(px) * py * py);
  for (std::uint32_t c = 0; c < py; ++c) {
    for (std::uint32_t b = 0; b < py; ++b) {
      const int bc = dot_index(b, c, s);
      const std::size_t base = (static_cast<std::size_t>(c) * py + b) * px;
      for (std::uint32_t a = 0; a < px; ++a) dual[base + a] = static_cast<std::uint8_t>((comps[b].dual(a) + 3 - bc) % 3);
    }
  }
  out.dual = TernaryFunction(spec.dim(), std::move(dual));
  out.b_plus = gmmf_embed_y(m, s, out.w_plus);
  out.b_minus = gmmf_embed_y(m, s, out.w_minus);
  if (!out.w_plus.empty() && !out.w_minus.empty()) {
    out.regularity = Regularity::NonWeaklyRegular;
  } else if (spec.dim() % 2 == 0 && out.w_minus.empty()) {
    out.regularity = Regularity::Regular;
  } else {
    out.regularity = Regularity::WeaklyRegular;
  }
  return out;
}

}  // namespace bentcode
