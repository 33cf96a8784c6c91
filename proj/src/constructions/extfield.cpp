#include "bentcode/constructions/extfield.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bentcode {
namespace {

using Poly = std::vector<int>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly normalize(const std::vector<int>& coeffs) {
  Poly p;
  for (int c : coeffs) p.push_back(Trit(c).value());
  trim(p);
  return p;
}

// remainder of a modulo monic b
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = Trit(a[shift + i] - lead * b[i]).value();
    trim(a);
  }
  return a;
}

Poly to_poly(std::uint32_t idx, int k) {
  Poly p(k);
  for (int i = 0; i < k; ++i, idx /= 3) p[i] = static_cast<int>(idx % 3);
  return p;
}

std::uint32_t to_index(const Poly& p) {
  std::uint32_t idx = 0;
  for (std::size_t i = p.size(); i-- > 0;) idx = idx * 3 + static_cast<std::uint32_t>(p[i]);
  return idx;
}

void check_modulus(const Poly& m) {
  if (m.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  if (m.back() != 1) throw std::invalid_argument("modulus must be monic");
  require_dimension(static_cast<int>(m.size()) - 1, kHardMaxDimension);
}

}  // namespace

bool is_irreducible(const std::vector<int>& modulus) {
  const Poly m = normalize(modulus);
  check_modulus(m);
  const int k = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    const auto count = static_cast<std::uint32_t>(pow3(d));
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly div = to_poly(low, d);
      div.push_back(1);
      if (poly_mod(m, div).empty()) return false;
    }
  }
  return true;
}

std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, const std::vector<int>& modulus) {
  const Poly m = normalize(modulus);
  const int k = static_cast<int>(m.size()) - 1;
  const Poly pa = to_poly(a, k), pb = to_poly(b, k);
  Poly prod(2 * k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % 3;
  }
  return to_index(poly_mod(prod, m));
}

std::vector<std::uint32_t> primitive_elements(const std::vector<int>& modulus) {
  const Poly m = normalize(modulus);
  check_modulus(m);
  if (!is_irreducible(m)) throw std::invalid_argument("modulus is reducible");
  const int k = static_cast<int>(m.size()) - 1;
  const auto order = pow3(k) - 1;
  // find one primitive element by brute force, then take its powers coprime to the order
  for (std::uint32_t g = 1; g <= order; ++g) {
    std::uint32_t x = g;
    std::uint64_t e = 1;
    while (x != 1) {
      x = poly_mulmod(x, g, m);
      ++e;
    }
    if (e != order) continue;
    std::vector<std::uint32_t> out;
    x = 1;
    for (std::uint64_t j = 0; j < order; ++j) {
      if (std::gcd(j, order) == 1) out.push_back(x);
      x = poly_mulmod(x, g, m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  throw std::logic_error("no primitive element in a field");
}

ExtField::ExtField(std::vector<int> modulus, std::uint32_t generator) : modulus_(normalize(modulus)) {
  check_modulus(modulus_);
  k_ = static_cast<int>(modulus_.size()) - 1;
  size_ = static_cast<std::uint32_t>(pow3(k_));
  if (!is_irreducible(modulus_)) throw std::invalid_argument("modulus is reducible");
  if (generator == 0 || generator >= size_) throw std::invalid_argument("generator out of range");
  generator_ = generator;
  const std::uint32_t order = size_ - 1;
  exp_.resize(order);
  log_.assign(size_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    if (i > 0 && x == 1) throw std::invalid_argument("generator is not primitive");
    exp_[i] = x;
    log_[x] = i;
    x = poly_mulmod(x, generator_, modulus_);
  }
  basis_trace_.resize(k_);
  for (int i = 0; i < k_; ++i) {
    const std::uint32_t b = static_cast<std::uint32_t>(pow3(i));
    std::uint32_t acc = 0, frob = b;
    for (int j = 0; j < k_; ++j) {
      acc = add(acc, frob);
      frob = pow(frob, 3);
    }
    if (acc >= 3) throw std::logic_error("trace left the prime field");
    basis_trace_[i] = Trit(static_cast<int>(acc));
  }
}

std::uint32_t ExtField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (size_ - 1)];
}

std::uint32_t ExtField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (size_ - 1))) % (size_ - 1)];
}

std::uint32_t ExtField::gen_pow(long long e) const {
  const long long order = size_ - 1;
  return exp_[static_cast<std::size_t>(((e % order) + order) % order)];
}

std::uint32_t ExtField::log(std::uint32_t a) const {
  if (a == 0 || a >= size_) throw std::invalid_argument("log of zero");
  return log_[a];
}

Trit ExtField::trace(std::uint32_t a) const {
  Trit t;
  for (int i = 0; i < k_; ++i, a /= 3) t = t + Trit(static_cast<int>(a % 3)) * basis_trace_[i];
  return t;
}

TernaryFunction trace_function(const ExtField& field, const std::vector<std::pair<long long, long long>>& terms) {
  if (terms.empty()) throw std::invalid_argument("trace_function: no terms");
  for (const auto& [c, e] : terms) {
    if (e < 0) throw std::invalid_argument("trace_function: negative exponent");
  }
  const long long order = field.size() - 1;
  return TernaryFunction::tabulate(field.degree(), [&](std::uint32_t x) {
    std::uint32_t acc = 0;
    for (const auto& [c, e] : terms) {
      std::uint32_t v;
      if (x == 0) {
        v = e == 0 ? field.gen_pow(c) : 0;
      } else {
        const long long l = (static_cast<long long>(field.log(x)) * (e % order) + c) % order;
        v = field.gen_pow(l);
      }
      acc = field.add(acc, v);
    }
    return field.trace(acc).value();
  });
}

}  // namespace bentcode
