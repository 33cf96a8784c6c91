#include "bentcode/kernels/kernels.hpp"

#include <omp.h>

#include <stdexcept>

#include "bentcode/core/arith.hpp"

namespace bentcode::kernels {
namespace {

void check_length(std::size_t len, int n) {
  if (n < 0 || n > kHardMaxDimension || len != pow3(n)) {
    throw std::invalid_argument("character_transform: length must be 3^n");
  }
}

inline void butterfly(Eisenstein* v, std::int64_t base, std::int64_t stride) {
  const Eisenstein a0 = v[base];
  const Eisenstein a1 = v[base + stride];
  const Eisenstein a2 = v[base + 2 * stride];
  v[base] = a0 + a1 + a2;
  v[base + stride] = a0 + a1.times_omega_sq() + a2.times_omega();
  v[base + 2 * stride] = a0 + a1.times_omega() + a2.times_omega_sq();
}

// Transposed copy of the defining set: column i holds coordinate i of every point.
std::vector<std::uint8_t> transpose_digits(int n, std::span<const std::uint32_t> defining) {
  const std::size_t k = defining.size();
  std::vector<std::uint8_t> cols(static_cast<std::size_t>(n) * k);
  for (std::size_t j = 0; j < k; ++j) {
    std::uint32_t x = defining[j];
    if (x >= pow3(n)) throw std::invalid_argument("codeword_weights: point out of range");
    for (int i = 0; i < n; ++i, x /= 3) cols[static_cast<std::size_t>(i) * k + j] = static_cast<std::uint8_t>(x % 3);
  }
  return cols;
}

// Weight of c_u using a caller-owned accumulator of length k.
inline std::uint32_t weight_of_message(std::uint32_t u, int n, std::size_t k, const std::uint8_t* cols,
                                       std::uint8_t* acc) {
  for (std::size_t j = 0; j < k; ++j) acc[j] = 0;
  for (int i = 0; i < n; ++i, u /= 3) {
    const std::uint8_t ui = static_cast<std::uint8_t>(u % 3);
    if (ui == 0) continue;
    const std::uint8_t* col = cols + static_cast<std::size_t>(i) * k;
    for (std::size_t j = 0; j < k; ++j) acc[j] = static_cast<std::uint8_t>(acc[j] + ui * col[j]);
  }
  std::uint32_t w = 0;
  for (std::size_t j = 0; j < k; ++j) w += (acc[j] % 3) != 0;
  return w;
}

}  // namespace

void character_transform_serial(std::span<Eisenstein> v, int n) {
  check_length(v.size(), n);
  const std::int64_t third = static_cast<std::int64_t>(v.size() / 3);
  std::int64_t stride = 1;
  for (int round = 0; round < n; ++round, stride *= 3) {
    for (std::int64_t t = 0; t < third; ++t) {
      butterfly(v.data(), (t / stride) * 3 * stride + t % stride, stride);
    }
  }
}

void character_transform(std::span<Eisenstein> v, int n) {
  check_length(v.size(), n);
  const std::int64_t third = static_cast<std::int64_t>(v.size() / 3);
  Eisenstein* data = v.data();
  std::int64_t stride = 1;
  for (int round = 0; round < n; ++round, stride *= 3) {
#pragma omp parallel for schedule(static) if (third >= 2048)
    for (std::int64_t t = 0; t < third; ++t) {
      butterfly(data, (t / stride) * 3 * stride + t % stride, stride);
    }
  }
}

std::vector<std::uint32_t> codeword_weights_serial(int n, std::span<const std::uint32_t> defining) {
  const std::size_t k = defining.size();
  const auto cols = transpose_digits(n, defining);
  std::vector<std::uint32_t> weights(pow3(n));
  std::vector<std::uint8_t> acc(k);
  for (std::uint32_t u = 0; u < weights.size(); ++u) weights[u] = weight_of_message(u, n, k, cols.data(), acc.data());
  return weights;
}

std::vector<std::uint32_t> codeword_weights(int n, std::span<const std::uint32_t> defining) {
  const std::size_t k = defining.size();
  const auto cols = transpose_digits(n, defining);
  const std::int64_t total = static_cast<std::int64_t>(pow3(n));
  std::vector<std::uint32_t> weights(static_cast<std::size_t>(total));
#pragma omp parallel if (total * static_cast<std::int64_t>(k) >= 65536)
  {
    std::vector<std::uint8_t> acc(k);
#pragma omp for schedule(static)
    for (std::int64_t u = 0; u < total; ++u) {
      weights[u] = weight_of_message(static_cast<std::uint32_t>(u), n, k, cols.data(), acc.data());
    }
  }
  return weights;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace bentcode::kernels
