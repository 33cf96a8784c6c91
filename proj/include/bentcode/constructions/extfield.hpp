#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bentcode/analysis/function.hpp"

namespace bentcode {

// GF(3^k) = F_3[x]/(modulus) in the polynomial basis. An element's index is
// the Point index of its coefficient vector (coefficient of x^i is coordinate i).
class ExtField {
 public:
  // modulus: k+1 coefficients, lowest degree first, monic. Throws std::invalid_argument
  // if it is reducible or the generator is not primitive.
  ExtField(std::vector<int> modulus, std::uint32_t generator);

  int degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t generator() const noexcept { return generator_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_index(a, b, k_); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // generator^e for any integer e
  std::uint32_t gen_pow(long long e) const;
  // discrete log base the generator; a != 0
  std::uint32_t log(std::uint32_t a) const;
  // a + a^3 + ... + a^{3^{k-1}}
  Trit trace(std::uint32_t a) const;

 private:
  int k_;
  std::uint32_t size_;
  std::vector<int> modulus_;
  std::uint32_t generator_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Trit> basis_trace_;
};

// Monic irreducibility over F_3 by trial division with every monic polynomial of degree <= k/2.
bool is_irreducible(const std::vector<int>& modulus);
// Product of polynomials mod modulus, by index; independent of any generator.
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, const std::vector<int>& modulus);
// Every primitive element of F_3[x]/(modulus), ascending.
std::vector<std::uint32_t> primitive_elements(const std::vector<int>& modulus);

// x -> Tr(sum_t generator^{c_t} x^{e_t}) for terms (c_t, e_t), tabulated over F_3^k.
TernaryFunction trace_function(const ExtField& field, const std::vector<std::pair<long long, long long>>& terms);

}  // namespace bentcode
