#pragma once

// Data-parallel kernels. Each has an OpenMP version and a serial reference;
// both produce bit-identical results (integer arithmetic only).

#include <cstdint>
#include <span>
#include <vector>

#include "bentcode/core/eisenstein.hpp"

namespace bentcode::kernels {

// In place: v[a] <- sum_x v[x] * w^{-a.x}, by n rounds of radix-3 butterflies.
// v.size() must be 3^n.
void character_transform(std::span<Eisenstein> v, int n);
void character_transform_serial(std::span<Eisenstein> v, int n);

// weights[u] = #{x in defining : u.x != 0} for every u in F_3^n.
std::vector<std::uint32_t> codeword_weights(int n, std::span<const std::uint32_t> defining);
std::vector<std::uint32_t> codeword_weights_serial(int n, std::span<const std::uint32_t> defining);

// Number of worker threads the parallel kernels will use.
int max_threads();

}  // namespace bentcode::kernels
