#include "bentcode/codes/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "bentcode/core/eisenstein.hpp"
#include "bentcode/core/subspace.hpp"
#include "bentcode/kernels/kernels.hpp"

namespace bentcode {

DefiningSet::DefiningSet(int n, std::vector<std::uint32_t> points) : n_(n) {
  require_dimension(n, kHardMaxDimension);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (!points.empty() && points.front() == 0) {
    had_zero_ = true;
    points.erase(points.begin());
  }
  for (auto p : points) {
    if (p >= pow3(n)) throw std::invalid_argument("DefiningSet: point out of range");
  }
  points_ = std::move(points);
}

namespace {

LinearCode assemble(const DefiningSet& s, std::vector<std::uint32_t> weights) {
  LinearCode code;
  code.length = s.size();
  code.dimension = rank(s.dim(), s.points());
  const std::uint64_t kernel = pow3(s.dim() - code.dimension);
  std::map<std::uint64_t, std::uint64_t> raw;
  for (auto w : weights) ++raw[w];
  for (const auto& [w, c] : raw) {
    if (c % kernel != 0) throw std::logic_error("build_code: weight count not divisible by 3^{n-r}");
    code.distribution[w] = c / kernel;
  }
  if (code.distribution[0] != 1) throw std::logic_error("build_code: zero codeword count != 1");
  code.min_distance = 0;
  for (const auto& [w, c] : code.distribution) {
    if (w > 0) {
      code.min_distance = w;
      break;
    }
  }
  code.message_weights = std::move(weights);
  return code;
}

}  // namespace

LinearCode build_code(const DefiningSet& s) {
  if (s.size() == 0) throw std::invalid_argument("build_code: empty defining set");
  return assemble(s, kernels::codeword_weights(s.dim(), s.points()));
}

LinearCode build_code_serial(const DefiningSet& s) {
  if (s.size() == 0) throw std::invalid_argument("build_code: empty defining set");
  return assemble(s, kernels::codeword_weights_serial(s.dim(), s.points()));
}

std::uint64_t weight_of(const Point& u, const DefiningSet& s) {
  if (u.dim() != s.dim()) throw std::invalid_argument("weight_of: dimension mismatch");
  std::uint64_t w = 0;
  for (auto x : s.points()) w += dot_index(u.index(), x, s.dim()) != 0;
  return w;
}

std::uint64_t weight_by_character_sum(const Point& u, const DefiningSet& s) {
  if (u.dim() != s.dim()) throw std::invalid_argument("weight_by_character_sum: dimension mismatch");
  Eisenstein chi;
  for (auto x : s.points()) chi += Eisenstein::omega_pow(dot_index(u.index(), x, s.dim()));
  // sigma_1(chi) + sigma_2(chi) = 2a - b
  const std::int64_t num = 2 * static_cast<std::int64_t>(s.size()) - (2 * chi.a - chi.b);
  if (num % 3 != 0 || num < 0) throw std::logic_error("weight_by_character_sum: inexact");
  return static_cast<std::uint64_t>(num / 3);
}

std::string enumerator_string(const WeightDistribution& d) {
  std::string out = "1";
  for (const auto& [w, c] : d) {
    if (w == 0 || c == 0) continue;
    out += "+" + std::to_string(c) + "y^" + std::to_string(w);
  }
  return out;
}

}  // namespace bentcode
